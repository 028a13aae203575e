#ifndef IBS_POLYLOG_HPP
#define IBS_POLYLOG_HPP

// Classical polylogarithms Li_s(z), multiple polylogarithms
//   Li_{s1..sm}(x1..xm) = sum_{n1 > ... > nm >= 1} x1^n1 ... xm^nm / (n1^s1 ... nm^sm),
// and generalized polylogarithms G(a1..an; z) defined by iterated integrals
// along the straight segment [0, z].

#include "ibs/bernoulli.hpp"
#include "ibs/complex.hpp"
#include "ibs/hurwitz.hpp"
#include "ibs/shuffle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

namespace ibs {

/// Side of the cut [1, inf) used when z lies on it. `automatic` is the
/// limit from above.
enum class CutSide { automatic, upper, lower };

template <>
struct letter_traits<Complex> {
  static bool is_zero(const Complex& a) { return a.is_zero(); }
  static bool less(const Complex& a, const Complex& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

/// Exact complex rational, used where letters must compare exactly.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(int r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }
};

inline GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  return {Rational(a.re + b.re), Rational(a.im + b.im)};
}
inline GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
  return {Rational(a.re - b.re), Rational(a.im - b.im)};
}
inline GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
}
inline GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) fail(ErrorKind::pole, "division by zero letter");
  Rational d = b.re * b.re + b.im * b.im;
  return {Rational((a.re * b.re + a.im * b.im) / d), Rational((a.im * b.re - a.re * b.im) / d)};
}
inline bool operator==(const GaussianRational& a, const GaussianRational& b) {
  return a.re == b.re && a.im == b.im;
}

template <>
struct letter_traits<GaussianRational> {
  static bool is_zero(const GaussianRational& a) { return a.is_zero(); }
  static bool less(const GaussianRational& a, const GaussianRational& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

/// Numeric value of a letter at the working precision.
inline Complex letter_value(const Complex& a) { return rounded(a); }
inline Complex letter_value(const GaussianRational& a) { return {Real(a.re), Real(a.im)}; }
inline Complex letter_value(int a) { return Complex(a); }

namespace detail {

// Shared read-only tables keyed by (order, precision). Built outside the
// lock; a racing duplicate build is harmless.
class TableMemo {
 public:
  using Table = std::shared_ptr<const std::vector<Real>>;

  template <class Build>
  Table get(int order, std::size_t count, Build build) {
    const auto key = std::make_pair(order, working_bits());
    {
      std::lock_guard lock(mu_);
      auto it = tables_.find(key);
      if (it != tables_.end() && it->second->size() >= count) return it->second;
    }
    auto table = std::make_shared<const std::vector<Real>>(build(count));
    std::lock_guard lock(mu_);
    tables_[key] = table;
    return table;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<int, mpfr_prec_t>, Table> tables_;
};

// 1/n^s for n = 0..count-1 (entry 0 unused).
inline TableMemo::Table inverse_powers(int s, std::size_t count) {
  static TableMemo memo;
  return memo.get(s, count, [s](std::size_t n) {
    std::vector<Real> v(n);
    for (std::size_t k = 1; k < n; ++k) v[k] = 1 / pow(Real(static_cast<long>(k)), s);
    return v;
  });
}

// zeta(s - k)/k! for k = 0..count-1, with the k = s-1 entry zero (that term
// carries the logarithmic part of the expansion around z = 1).
inline TableMemo::Table log_series_coefficients(int s, std::size_t count) {
  static TableMemo memo;
  return memo.get(s, count, [s](std::size_t n) {
    warm_bernoulli_cache(n + 2);
    std::vector<Real> v(n);
    Real fact(1);
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) fact *= static_cast<long>(k);
      const long arg = s - static_cast<long>(k);
      Real z;
      if (arg >= 2) {
        z = zeta_value(static_cast<int>(arg));
      } else if (arg == 1) {
        z = 0;
      } else if (arg == 0) {
        z = Real(-1) / 2;
      } else {
        const long m = -arg;  // zeta(-m) = -B_{m+1}/(m+1)
        z = -Real(Rational(bernoulli(static_cast<std::size_t>(m + 1)) / (m + 1)));
      }
      v[k] = z / fact;
    }
    return v;
  });
}

inline std::size_t series_cap() { return static_cast<std::size_t>(4 * working_bits() + 200); }

// sum_{n>=1} z^n / n^s for |z| < 1 with geometric tail bound.
inline Complex li_series(int s, const Complex& z) {
  const Real r = abs(z);
  if (r >= Real(1)) fail(ErrorKind::domain, "li_series needs |z| < 1");
  const Real eps = working_epsilon();
  const Real ratio = r / (1 - r);
  const std::size_t cap = static_cast<std::size_t>(
      std::ceil(static_cast<double>(working_bits()) * 0.6931471805599453 / -std::log(std::max(r.to_double(), 1e-300)))) + 8;
  auto inv = inverse_powers(s, std::min(cap, series_cap()) + 2);
  Complex power = z;
  Complex sum;
  for (std::size_t n = 1; n < inv->size(); ++n) {
    Complex term = power * (*inv)[n];
    sum += term;
    if (abs(term) * ratio <= eps * abs(sum)) return sum;
    power = power * z;
  }
  fail(ErrorKind::precision_unreachable, "li_series term cap reached");
}

// Expansion around z = 1 in mu = log z, valid for |mu| < 2 pi:
//   Li_s(e^mu) = sum_{k != s-1} zeta(s-k) mu^k/k! + mu^{s-1}/(s-1)! (H_{s-1} - log(-mu)).
inline Complex li_log_series(int s, const Complex& z, CutSide side) {
  const Complex mu = log(z);
  const Real rho = abs(mu) / (2 * pi());
  if (rho >= Real(0.9)) fail(ErrorKind::domain, "li_log_series outside its disc");
  Complex log_neg_mu;
  if (mu.im.is_zero() && mu.re.sign() > 0) {
    // z on the cut: the upper side has arg(-mu) -> -pi.
    log_neg_mu = {log(mu.re), side == CutSide::lower ? pi() : -pi()};
  } else {
    log_neg_mu = log(-mu);
  }
  const Real eps = working_epsilon();
  const Real rho2 = rho * rho;
  const Real tail_factor = rho2 / (1 - rho2);
  const double rho_d = std::max(rho.to_double(), 1e-30);
  const std::size_t need = static_cast<std::size_t>(
      static_cast<double>(working_bits()) * 0.6931471805599453 / -std::log(rho_d)) + static_cast<std::size_t>(s) + 16;
  auto coeff = log_series_coefficients(s, std::min(need, series_cap()));

  Complex sum;
  Complex mu_pow(1);  // mu^k
  Real fact(1);
  for (std::size_t k = 0; k < coeff->size(); ++k) {
    if (k > 0) mu_pow = mu_pow * mu;
    if (static_cast<int>(k) == s - 1) {
      Real harmonic;
      for (int j = 1; j < s; ++j) harmonic += Real(1) / j;
      Real kfact(1);
      for (int j = 2; j < s; ++j) kfact *= j;
      sum += mu_pow * (Complex(harmonic) - log_neg_mu) / kfact;
      continue;
    }
    const Real& c = (*coeff)[k];
    if (c.is_zero()) continue;
    Complex term = mu_pow * c;
    sum += term;
    if (static_cast<int>(k) > s && abs(term) * tail_factor <= eps * abs(sum)) return sum;
  }
  fail(ErrorKind::precision_unreachable, "li_log_series term cap reached");
}

// Bernoulli polynomial B_n(x).
inline Complex bernoulli_polynomial(int n, const Complex& x) {
  Complex result;
  Integer binom = 1;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      binom *= (n - j + 1);
      binom /= j;
    }
    Rational b = bernoulli(static_cast<std::size_t>(j));
    if (b == 0) continue;
    result += pow(x, n - j) * Real(Rational(b * binom));
  }
  return result;
}

inline Complex li_value(int s, const Complex& z, CutSide side = CutSide::automatic);

// Li_s(z) + (-1)^s Li_s(1/z) = -(2 pi i)^s / s! B_s(1/2 + log(-z)/(2 pi i)).
inline Complex li_inversion(int s, const Complex& z, CutSide side) {
  Complex log_minus_z;
  if (z.im.is_zero() && z.re.sign() > 0) {
    // z = x + i0 gives -z = -x - i0, so the upper side takes arg -pi.
    log_minus_z = {log(z.re), side == CutSide::lower ? pi() : -pi()};
  } else {
    log_minus_z = log(-z);
  }
  const Complex two_pi_i(Real(0), 2 * pi());
  Complex x = Complex(Real(1) / 2) + log_minus_z / two_pi_i;
  Real sfact(1);
  for (int j = 2; j <= s; ++j) sfact *= j;
  Complex rest = pow(two_pi_i, s) * bernoulli_polynomial(s, x) / sfact;
  Complex inner = li_value(s, Complex(1) / z, CutSide::automatic);
  if (s % 2 == 0) inner = -inner;
  return inner - rest;
}

inline Complex li_value(int s, const Complex& z, CutSide side) {
  if (s < 1) fail(ErrorKind::domain, "li needs s >= 1");
  require_finite(z, "li");
  if (z.is_zero()) return Complex();
  if (s == 1) {
    const Complex one_minus = Complex(1) - z;
    if (one_minus.is_zero()) fail(ErrorKind::pole, "Li_1 at z = 1");
    if (z.im.is_zero() && z.re > Real(1)) {
      // -log(1 - x -/+ i0) = -log(x - 1) +/- i pi
      Real lg = -log(z.re - 1);
      return {lg, side == CutSide::lower ? -pi() : pi()};
    }
    return -log(one_minus);
  }
  if (z.im.is_zero() && z.re == Real(1)) return Complex(zeta_value(s));
  const Real r = abs(z);
  if (r <= Real(0.75)) return li_series(s, z);
  if (r >= Real(4) / 3) return li_inversion(s, z, side);
  return li_log_series(s, z, side);
}

}  // namespace detail

/// Li_s(z) on the principal branch (cut [1, inf)); `side` picks the limit
/// from above or below for real z > 1.
inline ApComplex li(int s, const Complex& z, CutSide side, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  return {detail::li_value(s, letter_value(z), side), ctx.digits};
}
inline ApComplex li(int s, const Complex& z, const PrecisionCtx& ctx) {
  return li(s, z, CutSide::automatic, ctx);
}

// ---------------------------------------------------------------------------
// Multiple polylogarithms

template <class L>
struct MplSpec {
  std::vector<int> weights;
  std::vector<L> args;

  std::size_t depth() const { return weights.size(); }
  int weight() const {
    int k = 0;
    for (int s : weights) k += s;
    return k;
  }
};

namespace detail {

inline void check_mpl_shape(const std::vector<int>& weights, std::size_t nargs) {
  if (weights.empty()) fail(ErrorKind::domain, "MPL needs depth >= 1");
  if (weights.size() != nargs) fail(ErrorKind::domain, "MPL weights/args length mismatch");
  for (int s : weights)
    if (s < 1) fail(ErrorKind::domain, "MPL weights must be positive");
}

// Moduli of the prefix products x1, x1 x2, ..., x1...xm.
inline std::vector<Real> prefix_moduli(const std::vector<Complex>& x) {
  std::vector<Real> out;
  Complex p(1);
  for (const auto& xi : x) {
    p = p * xi;
    out.push_back(abs(p));
  }
  return out;
}

inline bool mpl_convergent(const std::vector<int>& weights, const std::vector<Complex>& x) {
  for (const auto& m : prefix_moduli(x))
    if (m > Real(1)) return false;
  if (weights.front() == 1 && x.front() == Complex(1)) return false;
  return true;
}

// Nested sum with the inner partial sums carried along:
//   A_j(n) = A_j(n-1) + x_j^n / n^{s_j} * A_{j+1}(n-1).
// For max prefix modulus rho < 1 the tail past N is bounded by
//   sum_{n>N} n^{max(0, m-1-s1)} rho^n;
// at rho = 1 partial sums at doubling N are compared against `tolerance`.
inline Complex mpl_series(const std::vector<int>& weights, const std::vector<Complex>& x,
                          const Real& tolerance, std::size_t heuristic_cap = std::size_t(1) << 22) {
  check_mpl_shape(weights, x.size());
  if (!mpl_convergent(weights, x)) fail(ErrorKind::divergent, "MPL outside its convergence domain");
  const std::size_t m = weights.size();
  Real rho_r;
  for (const auto& v : prefix_moduli(x)) rho_r = max(rho_r, v);
  const double rho = rho_r.to_double();
  const bool geometric = rho < 1.0 - 1e-12;
  const Real eps = working_epsilon();
  const double poly = std::max(0, static_cast<int>(m) - 1 - weights.front());

  std::vector<Complex> acc(m);
  std::vector<Complex> pw(m, Complex(1));
  std::vector<TableMemo::Table> inv(m);
  const std::size_t table = geometric ? std::min<std::size_t>(
                                            static_cast<std::size_t>(static_cast<double>(working_bits()) * 0.6931471805599453 /
                                                                     -std::log(std::max(rho, 1e-300)) * 1.5) + 64,
                                            series_cap() * 4)
                                      : 4096;
  for (std::size_t j = 0; j < m; ++j) inv[j] = inverse_powers(weights[j], table + 1);

  Complex last_checkpoint;
  std::size_t next_checkpoint = 64;
  for (std::size_t n = 1;; ++n) {
    for (std::size_t j = 0; j < m; ++j) pw[j] = pw[j] * x[j];
    for (std::size_t j = 0; j < m; ++j) {
      Complex t = n < inv[j]->size() ? pw[j] * (*inv[j])[n] : pw[j] / pow(Real(static_cast<long>(n)), weights[j]);
      if (j + 1 < m) {
        acc[j] += t * acc[j + 1];
      } else {
        acc[j] += t;
      }
    }
    if (geometric) {
      if (n % 8 != 0) continue;
      const double nn = static_cast<double>(n) + 1;
      const double ratio = rho * std::pow(1 + 1 / nn, static_cast<double>(m) - 1);
      if (ratio >= 1) continue;
      const double log_tail = poly * std::log(nn) + nn * std::log(rho) - std::log1p(-ratio);
      const Real scale = max(abs(acc[0]), eps);
      if (log_tail < std::log(2.0) * static_cast<double>(scale.exponent2() - static_cast<long>(working_bits()))) return acc[0];
      if (n > series_cap() * 16) fail(ErrorKind::precision_unreachable, "MPL term cap reached");
    } else if (n == next_checkpoint) {
      if (n > 64 && abs(acc[0] - last_checkpoint) <= tolerance * max(Real(1), abs(acc[0]))) return acc[0];
      last_checkpoint = acc[0];
      next_checkpoint *= 2;
      if (next_checkpoint > heuristic_cap) {
        fail(ErrorKind::precision_unreachable, "MPL on the unit circle did not settle within the term cap");
      }
    }
  }
}

}  // namespace detail

/// Direct nested summation of a convergent MPL. With all prefix products
/// strictly inside the unit disc the tail is bounded rigorously; on the
/// unit circle convergence is judged by doubling agreement at ctx.digits.
template <class L>
ApComplex mpl_direct(const MplSpec<L>& spec, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  std::vector<Complex> x;
  for (const auto& a : spec.args) x.push_back(letter_value(a));
  Real tol = pow(Real(10), -ctx.digits);
  return {detail::mpl_series(spec.weights, x, tol), ctx.digits};
}

// ---------------------------------------------------------------------------
// Generalized polylogarithms

template <class L>
struct GplWord {
  std::vector<L> letters;
  L arg;

  bool convergent() const {
    if (letters.empty()) return true;
    if (letter_traits<L>::is_zero(letters.back())) return false;
    return !(letters.front() == arg);
  }
};

template <class L>
struct MplConversion {
  int sign = 1;
  MplSpec<L> spec;
};

/// G(0^{a1-1}, b1, ..., 0^{an-1}, bn; z) = (-1)^n Li_{a1..an}(z/b1, b1/b2, ..., b_{n-1}/bn).
template <class L>
MplConversion<L> gpl_to_mpl(const GplWord<L>& word) {
  if (word.letters.empty() || all_zero(word.letters)) fail(ErrorKind::domain, "gpl_to_mpl: all-zero word");
  if (letter_traits<L>::is_zero(word.letters.back())) fail(ErrorKind::domain, "gpl_to_mpl: trailing zero");
  MplConversion<L> out;
  int zeros = 0;
  L previous = word.arg;
  for (const auto& a : word.letters) {
    if (letter_traits<L>::is_zero(a)) {
      ++zeros;
      continue;
    }
    out.spec.weights.push_back(zeros + 1);
    out.spec.args.push_back(previous / a);
    previous = a;
    zeros = 0;
    out.sign = -out.sign;
  }
  return out;
}

/// Inverse of gpl_to_mpl: b1 = z/x1, b_j = b_{j-1}/x_j, with a_j - 1 zeros
/// before each b_j.
template <class L>
GplWord<L> mpl_to_gpl(const MplSpec<L>& spec, const L& z) {
  detail::check_mpl_shape(spec.weights, spec.args.size());
  GplWord<L> word;
  word.arg = z;
  L previous = z;
  for (std::size_t j = 0; j < spec.depth(); ++j) {
    if (letter_traits<L>::is_zero(spec.args[j])) fail(ErrorKind::domain, "mpl_to_gpl: zero argument");
    for (int k = 1; k < spec.weights[j]; ++k) word.letters.push_back(L{});
    L letter = previous / spec.args[j];
    word.letters.push_back(letter);
    previous = letter;
  }
  return word;
}

namespace detail {

inline constexpr double kSeriesThreshold = 0.9;
inline constexpr int kHolderDepthCap = 24;

inline Complex gpl_value(const std::vector<Complex>& letters, const Complex& z, int depth = 0);

// G(b; 1) for a word without trailing zeros.
inline Complex gpl_at_one(const std::vector<Complex>& b, int depth) {
  if (b.front() == Complex(1)) fail(ErrorKind::divergent, "GPL with first letter equal to the argument");
  Real min_mod;
  bool have = false;
  for (const auto& a : b) {
    if (a.is_zero()) continue;
    if (a.im.is_zero() && a.re.sign() > 0 && a.re < Real(1)) {
      fail(ErrorKind::domain, "GPL letter lies on the integration path");
    }
    Real m = abs(a);
    if (!have || m < min_mod) min_mod = m;
    have = true;
  }
  if (Real(1) / min_mod <= Real(kSeriesThreshold)) {
    MplConversion<Complex> conv = gpl_to_mpl(GplWord<Complex>{b, Complex(1)});
    Complex v = mpl_series(conv.spec.weights, conv.spec.args, working_epsilon());
    return conv.sign < 0 ? -v : v;
  }
  if (depth >= kHolderDepthCap) fail(ErrorKind::precision_unreachable, "Hoelder convolution depth cap reached");
  // Path composition at 1/2:
  //   G(b; 1) = sum_j (-1)^j G(1-b_j, ..., 1-b_1; 1/2) G(b_{j+1}, ..., b_n; 1/2).
  const Complex half(Real(1) / 2);
  const std::size_t n = b.size();
  Complex total;
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<Complex> left;
    for (std::size_t i = j; i > 0; --i) left.push_back(Complex(1) - b[i - 1]);
    std::vector<Complex> right(b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    Complex l = left.empty() ? Complex(1) : gpl_value(left, half, depth + 1);
    if (l.is_zero()) continue;
    Complex r = right.empty() ? Complex(1) : gpl_value(right, half, depth + 1);
    Complex term = l * r;
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

inline Complex gpl_value(const std::vector<Complex>& letters, const Complex& z, int depth) {
  const std::size_t n = letters.size();
  if (n == 0) return Complex(1);
  require_finite(z, "gpl");
  if (all_zero(letters)) {
    if (z.is_zero()) fail(ErrorKind::pole, "G(0,...,0; 0)");
    Real fact(1);
    for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<long>(k);
    return pow(log(z), static_cast<long>(n)) / fact;
  }
  if (z.is_zero()) return Complex();
  if (letters.front() == z) fail(ErrorKind::divergent, "GPL with first letter equal to the argument");
  if (letters.back().is_zero()) {
    const Complex lz = log(z);
    Complex total;
    const WordCombination<Complex> reduced = remove_trailing_zeros(letters);
    for (const auto& [t, c] : reduced.terms()) {
      Complex g = gpl_value(t.word, z, depth);
      total += g * pow(lz, static_cast<long>(t.power)) * Real(c);
    }
    return total;
  }
  std::vector<Complex> b;
  b.reserve(n);
  for (const auto& a : letters) b.push_back(a / z);
  return gpl_at_one(b, depth);
}

}  // namespace detail

/// Evaluates G(letters; arg). Trailing zeros are shuffled out into powers of
/// log(arg); the remaining words are rescaled to argument 1 and summed as
/// MPLs when every letter has modulus >= 1/0.9, otherwise split by the
/// Hoelder convolution at 1/2.
template <class L>
ApComplex gpl_eval(const GplWord<L>& word, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  std::vector<Complex> letters;
  for (const auto& a : word.letters) letters.push_back(letter_value(a));
  return {detail::gpl_value(letters, letter_value(word.arg)), ctx.digits};
}

namespace detail {
// Any convergent MPL: direct summation inside the disc, otherwise through
// its G-function representation at argument 1.
inline Complex mpl_value(const std::vector<int>& weights, const std::vector<Complex>& x) {
  check_mpl_shape(weights, x.size());
  if (!mpl_convergent(weights, x)) fail(ErrorKind::divergent, "MPL outside its convergence domain");
  Real rho;
  for (const auto& v : prefix_moduli(x)) rho = max(rho, v);
  if (rho <= Real(kSeriesThreshold)) return mpl_series(weights, x, working_epsilon());
  MplSpec<Complex> spec{weights, x};
  GplWord<Complex> w = mpl_to_gpl(spec, Complex(1));
  Complex g = gpl_value(w.letters, w.arg);
  return (weights.size() % 2 == 0) ? g : -g;
}
}  // namespace detail

/// Convergent MPL by the fastest applicable route.
template <class L>
ApComplex mpl_eval(const MplSpec<L>& spec, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  std::vector<Complex> x;
  for (const auto& a : spec.args) x.push_back(letter_value(a));
  return {detail::mpl_value(spec.weights, x), ctx.digits};
}

}  // namespace ibs

#endif  // IBS_POLYLOG_HPP
