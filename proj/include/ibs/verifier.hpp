#ifndef IBS_VERIFIER_HPP
#define IBS_VERIFIER_HPP

// Identity catalog and the engine that compares independent evaluations of
// each side.

#include "ibs/constants.hpp"
#include "ibs/contour.hpp"
#include "ibs/series.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace ibs {

namespace lhs {
/// scale * S_k(z)
struct Series {
  int k;
  Expr z;
  Expr scale;
};
/// sum_{n>=1} 1/(n^3 C(3n,n) 2^n)
struct Chudnovsky {};
/// An expression evaluated on its own (e.g. a defining polylogarithm value).
struct Expression {
  Expr value;
};
/// ((1 - w^2)/w) 3F2(1/2,1,1; 3/2,3/2; -((1-w^2)/w)^2/4)
struct Hyp32 {
  Expr w;
};
/// Seeded samples of w for x S_3(-x^2) against the Li_2/Li_3 closed form.
struct ChenFamilyFamily {
  std::uint64_t seed;
  int samples;
};
}  // namespace lhs

using Lhs = std::variant<lhs::Series, lhs::Chudnovsky, lhs::Expression, lhs::Hyp32, lhs::ChenFamilyFamily>;

struct Identity {
  std::string id;
  std::string description;
  Lhs left;
  std::optional<Expr> rhs;  // absent for the parametric family
  int weight = 0;
  int level = 0;  // 0 where no level is stated
  std::string anchor;
  int min_digits = 40;
  std::optional<Expr> contour_w;  // second pathway for Series entries
};

enum class Status { pass, fail, error };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "?";
}

struct VerificationReport {
  std::string id;
  std::string anchor;
  Status status = Status::error;
  Complex lhs_value;
  Complex rhs_value;
  Real abs_diff;
  double digits_agreed = 0;
  std::optional<double> contour_digits;
  int precision_used = 0;
  double elapsed_ms = 0;
  std::string message;
};

// ---------------------------------------------------------------------------

namespace detail {

inline Expr c_(Named n) { return constant(n); }
inline Expr li_(int s, const Expr& p) { return li_of(s, p); }
inline Expr im_li(int s, const Expr& p) { return im_of(li_of(s, p)); }
inline Expr one() { return lit(1); }

}  // namespace detail

/// Admissible Li_2/Li_3 parameters from a fixed seed: three real, three on
/// the unit circle (rational points), the rest inside the domain. Values are
/// exact rationals so every platform sees the same inputs.
inline std::vector<GaussianRational> chen_family_samples(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](double a, double b) {
    // 53 random bits mapped to [a, b); avoids distribution differences between
    // standard libraries.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return a + (b - a) * u;
  };
  std::vector<GaussianRational> out;
  for (int j = 0; j < count; ++j) {
    if (j < 3) {
      out.push_back({Rational(uniform(0.42, 0.98)), Rational(0)});
    } else if (j < 6) {
      const Rational t(uniform(0.05, 0.95));
      const Rational d = 1 + t * t;
      out.push_back({Rational((1 - t * t) / d), Rational(2 * t / d)});
    } else {
      for (;;) {
        const double r = uniform(0.25, 0.99);
        const double th = uniform(0.05, 1.52);
        const double re = r * std::cos(th);
        const double im = r * std::sin(th);
        const double mod = std::hypot(1 - (re * re - im * im), -2 * re * im);
        if (mod <= 2 * r * 0.98) {
          out.push_back({Rational(re), Rational(im)});
          break;
        }
      }
    }
  }
  return out;
}

inline constexpr std::uint64_t kChenFamilySeed = 0x5EED;

/// The built-in catalog: 20 fixed identities and one parametric family.
inline std::vector<Identity> builtin_catalog() {
  using namespace detail;
  const Expr pi_ = c_(Named::pi);
  const Expr G = c_(Named::catalan_G);
  const Expr z3 = c_(Named::zeta3);
  const Expr b4 = c_(Named::beta4);
  const Expr L823 = c_(Named::L_8_2_3);
  const Expr L844 = c_(Named::L_8_4_4);
  const Expr L324 = c_(Named::L_3_2_4);
  const Expr L1243 = c_(Named::L_12_4_3);
  const Expr GG = c_(Named::mathcal_G);
  const Expr lam = c_(Named::lam);
  const Expr Lam = c_(Named::Lam);
  const Expr pound = c_(Named::pound);
  const Expr sL = c_(Named::scriptL);
  const Expr lt = c_(Named::lam_tilde);
  const Expr Lt = c_(Named::Lam_tilde);
  const Expr phi = c_(Named::phi);
  const Expr I = imag();
  const Expr r2 = sqrt_of(2);
  const Expr r3 = sqrt_of(3);
  const Expr r5 = sqrt_of(5);
  const Expr inv_r2 = sqrt_of(q(1, 2));
  const Expr e14 = exp_i_pi_of(q(1, 4));
  const Expr r2m1 = r2 - one();                      // sqrt2 - 1
  const Expr one_m_inv_r2 = one() - inv_r2;          // 1 - 1/sqrt2
  const Expr two_m_r3 = lit(2) - r3;                 // 2 - sqrt3

  std::vector<Identity> cat;

  cat.push_back({"chudnovsky", "sum 1/(n^3 C(3n,n) 2^n)", lhs::Chudnovsky{},
                 pi_ * G - q(33, 16) * z3 + q(1, 6) * pow(lam, 3) - q(1, 24) * pow(pi_, 2) * lam, 3, 0,
                 "cubic inverse binomial sum with 2^n", 40, std::nullopt});

  cat.push_back({"chen_pos", "S_3(1)", lhs::Series{3, one(), one()},
                 q(32, 3) * GG - q(4, 3) * pi_ * li_(2, two_m_r3) - q(1, 9) * pow(pi_, 3) -
                     q(1, 3) * pi_ * pow(lam - Lt, 2),
                 3, 12, "Chen series, positive signs", 40, exp_i_pi_of(q(1, 6))});

  cat.push_back({"chen_neg", "S_3(-1)", lhs::Series{3, lit(-1), one()},
                 -q(4, 3) * li_(3, pow(phi, -3)) - 4 * li_(2, pow(phi, -3)) * pound + li_(3, pow(phi, -1)) -
                     q(25, 3) * pow(pound, 3) + 6 * lam * pow(pound, 2) + q(1, 10) * pow(pi_, 2) * pound +
                     q(12, 5) * z3 - q(1, 3) * pow(pi_, 2) * lam,
                 3, 10, "Chen series, alternating signs", 40, pow(phi, -1)});

  cat.push_back({"catalanlike", "Im Li_3((1+i)/2)", lhs::Expression{im_li(3, (one() + I) / 2)},
                 -im_of(mpl_of({2, 1}, {I, one()})) - q(1, 2) * G * lam + q(1, 32) * pi_ * pow(lam, 2) +
                     q(3, 128) * pow(pi_, 3),
                 3, 4, "Catalan-like trilogarithm constant", 40, std::nullopt});

  cat.push_back({"s3_2", "sqrt(2) S_3(2)", lhs::Series{3, lit(2), r2},
                 -8 * im_li(3, (one() - e14) / 2) - 4 * im_li(3, I * r2m1) -
                     q(1, 32) * pi_ *
                         (48 * li_(2, r2m1) - 12 * lam * lt + 20 * pow(lt, 2) + 9 * pow(lam, 2)) +
                     q(15, 128) * pow(pi_, 3),
                 3, 8, "S_3 at z = 2", 40, e14});

  cat.push_back({"s4_2", "sqrt(2) S_4(2)", lhs::Series{4, lit(2), r2},
                 -36 * im_li(4, one() - e14) - 12 * im_li(4, (one() - e14) / 2) - 12 * im_li(4, I * (one() - e14)) -
                     12 * im_li(4, I * r2m1) - q(9, 2) * b4 - 14 * r2 * L844 + q(10, 3) * pi_ * r2 * L823 -
                     q(9, 2) * pi_ * li_(3, inv_r2) + q(63, 128) * pi_ * z3 +
                     q(1, 256) * pi_ *
                         (78 * pow(lam, 2) * lt - 12 * lam * pow(lt, 2) - 24 * pow(lt, 3) + 47 * pow(lam, 3)) -
                     q(3, 1024) * pow(pi_, 3) * (141 * lam - 98 * lt),
                 4, 8, "S_4 at z = 2", 40, e14});

  const Expr p_1mi3_4 = (one() - I * r3) / 4;
  const Expr p_1pi3_2 = (one() + I * pow(r3, -1)) / 2;
  cat.push_back({"s3_3", "sqrt(3) S_3(3)", lhs::Series{3, lit(3), r3},
                 -8 * im_li(3, p_1mi3_4) - 5 * im_li(3, p_1pi3_2) + q(1, 3) * pi_ * li_(2, lit(q(1, 4))) +
                     q(1, 48) * pi_ * pow(Lam, 2) - q(7, 432) * pow(pi_, 3),
                 3, 6, "S_3 at z = 3", 40, exp_i_pi_of(q(1, 3))});

  cat.push_back({"s4_3", "sqrt(3) S_4(3)", lhs::Series{4, lit(3), r3},
                 8 * im_li(4, (lit(3) + I * r3) / 4) - 8 * im_li(4, p_1mi3_4) - 5 * im_li(4, p_1pi3_2) -
                     q(45, 16) * r3 * L324 + q(1, 3) * pi_ * (li_(3, lit(q(1, 3))) + li_(3, lit(q(1, 4)))) -
                     q(19, 36) * pi_ * z3 +
                     q(1, 288) * pi_ *
                         (64 * pow(lam, 3) - 192 * pow(lam, 2) * Lam + 144 * lam * pow(Lam, 2) - 41 * pow(Lam, 3)) +
                     q(1, 864) * pow(pi_, 3) * (144 * lam - 41 * Lam),
                 4, 6, "S_4 at z = 3", 40, exp_i_pi_of(q(1, 3))});

  cat.push_back({"s3_4", "S_3(4)", lhs::Series{3, lit(4), one()},
                 4 * GG - q(1, 8) * pi_ * pow(lam, 2) - q(1, 32) * pow(pi_, 3), 3, 4, "S_3 at z = 4", 40,
                 std::nullopt});

  cat.push_back({"s4_4", "S_4(4)", lhs::Series{4, lit(4), one()},
                 8 * im_li(4, (one() + I) / 2) - 4 * b4 + q(1, 24) * pi_ * pow(lam, 3) +
                     q(1, 32) * pow(pi_, 3) * lam,
                 4, 4, "S_4 at z = 4", 40, std::nullopt});

  const Expr third = lit(q(1, 3));
  const Expr quarter = lit(q(1, 4));
  cat.push_back({"s3_m94", "S_3(-9/4)", lhs::Series{3, lit(q(-9, 4)), one()},
                 q(4, 3) * li_(3, third) + 2 * li_(3, quarter) - q(5, 9) * z3 + 2 * li_(2, quarter) * lam +
                     q(2, 9) * (6 * pow(lam, 3) - pow(Lam, 3)) - q(1, 9) * pow(pi_, 2) * (3 * lam - 2 * Lam),
                 3, 6, "S_3 at z = -9/4", 40, lit(q(1, 2))});

  cat.push_back({"s4_m94", "S_4(-9/4)", lhs::Series{4, lit(q(-9, 4)), one()},
                 q(80, 9) * li_(4, lit(q(1, 2))) - q(40, 3) * li_(4, third) + 8 * li_(4, lit(q(2, 3))) +
                     q(7, 2) * li_(4, quarter) + q(5, 6) * li_(4, lit(q(1, 9))) + 4 * li_(3, third) * lam +
                     3 * li_(3, quarter) * lam - q(50, 9) * z3 * lam -
                     q(1, 27) * (35 * pow(lam, 4) - 54 * pow(lam, 2) * pow(Lam, 2) + 54 * lam * pow(Lam, 3) -
                                 9 * pow(Lam, 4)) -
                     q(1, 54) * pow(pi_, 2) * lam * (11 * lam - 36 * Lam) - q(101, 1620) * pow(pi_, 4),
                 4, 6, "S_4 at z = -9/4", 40, lit(q(1, 2))});

  cat.push_back({"s3_m4", "S_3(-4)", lhs::Series{3, lit(-4), one()},
                 -2 * li_(3, r2m1) + q(4, 3) * r2 * L823 + q(25, 16) * z3 - 2 * li_(2, r2m1) * lt -
                     q(2, 3) * pow(lt, 3) + q(1, 2) * lam * pow(lt, 2) - q(1, 8) * pow(pi_, 2) * lam,
                 3, 8, "S_3 at z = -4", 40, r2m1});

  cat.push_back({"s4_m4", "S_4(-4)", lhs::Series{4, lit(-4), one()},
                 q(40, 7) * li_(4, one_m_inv_r2) + q(4, 21) * li_(4, r2m1) + q(4, 7) * li_(4, inv_r2) -
                     q(27, 28) * li_(4, lit(q(1, 2))) - q(59, 14) * li_(4, pow(r2m1, 2)) +
                     q(19, 84) * li_(4, pow(r2m1, 4)) - q(2, 21) * li_(4, one_m_inv_r2 / 2) +
                     q(8, 3) * r2 * L823 * lt - 4 * li_(3, inv_r2) * lt + q(7, 16) * z3 * lt +
                     q(1, 4032) * (600 * pow(lam, 3) * lt + 1224 * pow(lam, 2) * pow(lt, 2) + 96 * lam * pow(lt, 3) -
                                   752 * pow(lt, 4) - 177 * pow(lam, 4)) -
                     q(1, 504) * pow(pi_, 2) * (189 * lam * lt - 61 * pow(lt, 2) - 30 * pow(lam, 2)) +
                     q(11, 7560) * pow(pi_, 4),
                 4, 8, "S_4 at z = -4", 40, r2m1});

  cat.push_back({"s3_m12", "sqrt(2) S_3(-1/2)", lhs::Series{3, lit(q(-1, 2)), r2},
                 -80 * li_(3, inv_r2) + 64 * r2 * L823 + q(35, 4) * z3 - 20 * li_(2, r2m1) * lam +
                     10 * pow(lam, 2) * lt - 10 * lam * pow(lt, 2) + q(5, 3) * pow(lam, 3) -
                     q(15, 4) * pow(pi_, 2) * lam,
                 3, 8, "S_3 at z = -1/2", 40, inv_r2});

  cat.push_back({"s4_m12", "sqrt(2) S_4(-1/2)", lhs::Series{4, lit(q(-1, 2)), r2},
                 q(1669, 14) * li_(4, lit(q(1, 2))) - q(2112, 7) * li_(4, one_m_inv_r2) - q(704, 21) * li_(4, r2m1) +
                     q(24, 7) * li_(4, inv_r2) + q(1510, 7) * li_(4, pow(r2m1, 2)) -
                     q(475, 42) * li_(4, pow(r2m1, 4)) + q(352, 21) * li_(4, one_m_inv_r2 / 2) -
                     100 * li_(3, inv_r2) * lam + q(224, 3) * r2 * L823 * lam + q(175, 16) * z3 * lam +
                     q(2, 63) * (99 * pow(lam, 3) * lt - 297 * pow(lam, 2) * pow(lt, 2) - 132 * lam * pow(lt, 3) +
                                 299 * pow(lt, 4) + 309 * pow(lam, 4)) +
                     q(1, 252) * pow(pi_, 2) * (1848 * lam * lt - 1336 * pow(lt, 2) - 2115 * pow(lam, 2)) +
                     q(397, 3780) * pow(pi_, 4),
                 4, 8, "S_4 at z = -1/2", 40, inv_r2});

  const Expr inv_r5 = sqrt_of(q(1, 5));
  cat.push_back({"s3_m165", "sqrt(5) S_3(-16/5)", lhs::Series{3, lit(q(-16, 5)), r5},
                 q(5, 4) * li_(3, lit(q(1, 5))) + q(27, 2) * li_(3, pow(phi, -1)) - 10 * li_(3, inv_r5) -
                     q(27, 20) * z3 + q(5, 8) * (li_(2, lit(q(1, 5))) - 4 * li_(2, inv_r5)) * sL -
                     q(9, 2) * pow(pound, 3) + q(27, 20) * pow(pi_, 2) * pound - q(5, 16) * pow(pi_, 2) * sL,
                 3, 10, "S_3 at z = -16/5", 40, inv_r5});

  const Expr r3m1_2 = (r3 - one()) / 2;
  cat.push_back({"s3_m43", "sqrt(3) S_3(-4/3)", lhs::Series{3, lit(q(-4, 3)), r3},
                 -q(21, 10) * li_(3, third) - q(7, 40) * li_(3, quarter) - li_(3, r3m1_2) +
                     q(11, 20) * li_(3, one() - r3 / 2) + q(9, 5) * li_(3, two_m_r3 / 3) - 7 * li_(3, two_m_r3) +
                     q(24, 5) * li_(3, 2 * r3 - lit(3)) + q(11, 5) * li_(3, 3 * r3 - lit(5)) +
                     q(3, 5) * r3 * L1243 + q(39, 10) * z3 + q(3, 8) * li_(2, quarter) * Lam -
                     3 * li_(2, r3m1_2) * Lam - 3 * li_(2, two_m_r3) * Lam - q(17, 80) * pow(lam, 2) * Lt +
                     q(71, 80) * lam * pow(Lt, 2) - q(3, 4) * lam * Lam * Lt - q(3, 20) * pow(Lam, 2) * Lt +
                     q(21, 40) * Lam * pow(Lt, 2) - q(209, 240) * pow(Lt, 3) + q(13, 80) * pow(lam, 3) +
                     q(3, 8) * pow(lam, 2) * Lam + q(1, 20) * pow(Lam, 3) + q(7, 40) * pow(pi_, 2) * Lt -
                     q(7, 20) * pow(pi_, 2) * lam - q(7, 80) * pow(pi_, 2) * Lam,
                 3, 12, "S_3 at z = -4/3", 40, pow(r3, -1)});

  const Expr w_half = lit(q(1, 2));
  cat.push_back({"f32_k2", "3F2 form of x S_2(-x^2) at w = 1/2", lhs::Hyp32{w_half},
                 -2 * (li_(2, w_half) - li_(2, -w_half)) - 2 * log_of(w_half) * log_of((one() - w_half) / (one() + w_half)) +
                     q(1, 2) * pow(pi_, 2),
                 2, 0, "weight-2 hypergeometric reduction", 40, std::nullopt});

  cat.push_back({"s1_classical", "S_1(1)", lhs::Series{1, one(), one()}, q(2, 9) * r3 * pi_, 1, 0,
                 "classical arcsine form of S_1", 40, std::nullopt});

  cat.push_back({"chen_family", "x S_3(-x^2), x = (1-w^2)/w, 20 seeded w", lhs::ChenFamilyFamily{kChenFamilySeed, 20},
                 std::nullopt, 3, 0, "Li_2/Li_3 evaluation for general w", 30, std::nullopt});
  return cat;
}

// ---------------------------------------------------------------------------

namespace detail {

struct SideValues {
  Complex lhs;
  Complex rhs;
  std::optional<Complex> contour;  // contour pathway mapped onto the lhs scale
};

inline Complex eval_lhs(const Lhs& l, const PrecisionCtx& ctx) {
  const int digits = ctx.digits;
  return std::visit(
      [&](const auto& x) -> Complex {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, lhs::Series>) {
          return eval_value(x.scale) * s_value(x.k, eval_value(x.z), digits);
        } else if constexpr (std::is_same_v<T, lhs::Chudnovsky>) {
          return chudnovsky_sum(ctx).value;
        } else if constexpr (std::is_same_v<T, lhs::Expression>) {
          return eval_value(x.value);
        } else if constexpr (std::is_same_v<T, lhs::Hyp32>) {
          return k2_form_value(eval_value(x.w), digits);
        } else {
          fail(ErrorKind::domain, "parametric family has no single left side");
        }
      },
      l);
}

inline double capped_digits(const Complex& a, const Complex& b, int cap) {
  return agreement_digits(a, b, static_cast<double>(cap));
}

inline VerificationReport verify_once(const Identity& id, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  VerificationReport r;
  r.id = id.id;
  r.anchor = id.anchor;
  r.precision_used = ctx.working_digits();
  const int required = std::min(id.min_digits, ctx.digits);

  if (const auto* fam = std::get_if<lhs::ChenFamilyFamily>(&id.left)) {
    double worst = static_cast<double>(ctx.digits) + 1;
    for (const auto& w : chen_family_samples(fam->seed, fam->samples)) {
      const Complex wv = letter_value(w);
      const Complex x = (Complex(1) - wv * wv) / wv;
      const Complex left = x.is_zero() ? Complex() : x * s_value(3, -(x * x), ctx.digits);
      const Complex right = chen_family_rhs_value(wv);
      const double d = capped_digits(left, right, ctx.digits);
      if (d < worst) {
        worst = d;
        r.lhs_value = left;
        r.rhs_value = right;
        r.abs_diff = abs(left - right);
      }
    }
    r.digits_agreed = worst;
    r.status = worst >= required ? Status::pass : Status::fail;
    return r;
  }

  r.lhs_value = eval_lhs(id.left, ctx);
  r.rhs_value = eval_value(*id.rhs);
  r.abs_diff = abs(r.lhs_value - r.rhs_value);
  r.digits_agreed = capped_digits(r.lhs_value, r.rhs_value, ctx.digits);
  bool ok = r.digits_agreed >= required;

  if (id.contour_w) {
    const auto* series = std::get_if<lhs::Series>(&id.left);
    if (!series) fail(ErrorKind::domain, "contour pathway needs a series entry");
    const Complex w = eval_value(*id.contour_w);
    const Complex x = (Complex(1) - w * w) / w;
    const Complex z = eval_value(series->z);
    if (agreement_digits(-(x * x), z, ctx.digits) < ctx.digits - 2) {
      fail(ErrorKind::domain, "contour parameter does not match the series argument");
    }
    const Complex mapped = genchen_value(series->k, w, ctx.digits) * eval_value(series->scale) / x;
    r.contour_digits = capped_digits(mapped, r.rhs_value, ctx.digits);
    ok = ok && *r.contour_digits >= required;
  }
  r.status = ok ? Status::pass : Status::fail;
  return r;
}

}  // namespace detail

/// Evaluates both sides (and the contour pathway where the entry has one).
/// Retries with doubled guard digits when a target is unreachable.
inline VerificationReport verify(const Identity& id, const PrecisionCtx& ctx) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  PrecisionCtx attempt = ctx;
  for (int retry = 0;; ++retry) {
    try {
      r = detail::verify_once(id, attempt);
      break;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::precision_unreachable && retry < 2) {
        attempt = attempt.with_guard(std::max(1, attempt.guard) * 2);
        continue;
      }
      r = VerificationReport{};
      r.id = id.id;
      r.anchor = id.anchor;
      r.status = Status::error;
      r.precision_used = attempt.working_digits();
      r.message = e.what();
      break;
    } catch (const std::exception& e) {
      r = VerificationReport{};
      r.id = id.id;
      r.anchor = id.anchor;
      r.status = Status::error;
      r.precision_used = attempt.working_digits();
      r.message = e.what();
      break;
    }
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Verifies every entry on `workers` threads; reports keep catalog order.
inline std::vector<VerificationReport> verify_all(const std::vector<Identity>& catalog, const PrecisionCtx& ctx,
                                                  int workers) {
  if (workers < 1) fail(ErrorKind::domain, "workers must be >= 1");
  {
    PrecisionScope scope(ctx);
    warm_bernoulli_cache(static_cast<std::size_t>(2 * working_bits() + 64));
  }
  std::vector<VerificationReport> out(catalog.size());
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++) out[i] = verify(catalog[i], ctx);
  };
  const int n = std::min<int>(workers, static_cast<int>(std::max<std::size_t>(catalog.size(), 1)));
  if (n <= 1) {
    run();
    return out;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < n; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();
  return out;
}

inline std::vector<VerificationReport> verify_all(const PrecisionCtx& ctx, int workers) {
  return verify_all(builtin_catalog(), ctx, workers);
}

/// FNV-1a over ids and printed right-hand sides.
inline std::uint64_t catalog_hash(const std::vector<Identity>& catalog) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  for (const auto& id : catalog) {
    mix(id.id);
    mix(id.description);
    mix(id.rhs ? to_string(*id.rhs) : std::string("-"));
    mix(std::to_string(id.weight) + "/" + std::to_string(id.level));
  }
  return h;
}

}  // namespace ibs

#endif  // IBS_VERIFIER_HPP
