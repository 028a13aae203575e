#ifndef IBS_SERIES_HPP
#define IBS_SERIES_HPP

// Inverse binomial series S_k(z) = sum_{n>=0} z^n / ((2n+1)^k C(2n,n)),
// classical closed forms for k = 0, 1, and both sides of the Li_2/Li_3
// evaluation of x S_3(-x^2) with x = (1 - w^2)/w.

#include "ibs/contour.hpp"
#include "ibs/polylog.hpp"

namespace ibs {

struct SeriesSpec {
  int k = 0;
  Complex z;
};

inline constexpr double kDirectSumRadius = 3.5;

namespace detail {

// Relative slack admitted on boundary tests such as |z| <= 4, so that
// rounded algebraic inputs on the boundary are accepted.
inline Real boundary_slack() { return ldexp(Real(1), 16 - static_cast<long>(working_bits())); }

// sum a_n / (2n+1)^k with a_{n+1} = a_n z (n+1) / (2(2n+1)). The term ratio
// is at most r_n = |z|(n+1)/(4n+2), decreasing to |z|/4, so the tail after
// term n is at most |t_n| r_n / (1 - r_n).
inline Complex s_direct(int k, const Complex& z) {
  const Real r = abs(z);
  if (r >= Real(4)) fail(ErrorKind::divergent, "direct summation needs |z| < 4");
  const Real eps = working_epsilon();
  Complex a(1);
  Complex sum;
  const long cap = 64L * static_cast<long>(working_bits()) + 1000;
  for (long n = 0; n < cap; ++n) {
    const long odd = 2 * n + 1;
    Complex term = k == 0 ? a : a / pow(Real(odd), k);
    sum += term;
    const Real rn = r * (n + 1) / (4 * n + 2);
    if (rn < Real(1) && abs(term) * rn <= eps * abs(sum) * (1 - rn)) return sum;
    a = a * z * (n + 1) / (2 * odd);
  }
  fail(ErrorKind::precision_unreachable, "S_k series term cap reached");
}

inline Complex s_value(int k, const Complex& z, int digits) {
  if (k < 0) fail(ErrorKind::domain, "S_k needs k >= 0");
  if (z.is_zero()) return Complex(1);
  const Real r = abs(z);
  if (r <= Real(kDirectSumRadius)) return s_direct(k, z);
  if (r > 4 * (1 + boundary_slack())) fail(ErrorKind::divergent, "S_k diverges for |z| > 4");
  if (k < 2) fail(ErrorKind::divergent, "S_k on |z| near 4 needs k >= 2");
  const Complex y = sqrt(z);
  return beta_integral_value(k, y, digits) / y;
}

}  // namespace detail

/// S_k(z). Direct summation for |z| <= 3.5; for 3.5 < |z| <= 4 (k >= 2) the
/// beta-type integral representation is integrated instead.
inline ApComplex s_series(const SeriesSpec& spec, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  return {detail::s_value(spec.k, rounded(spec.z), ctx.digits), ctx.digits};
}
inline ApComplex s_series(int k, const Complex& z, const PrecisionCtx& ctx) { return s_series({k, z}, ctx); }

namespace detail {
inline void check_closed_domain(const Complex& z) {
  if (z.im.is_zero() && z.re >= Real(4)) {
    if (z.re == Real(4)) fail(ErrorKind::pole, "closed form has a pole at z = 4");
    fail(ErrorKind::domain, "closed form needs z outside [4, inf)");
  }
}
}  // namespace detail

/// S_1(z) = 4 asin(sqrt(z)/2) / sqrt(z (4 - z)).
inline ApComplex s1_closed(const Complex& z_in, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Complex z = rounded(z_in);
  detail::check_closed_domain(z);
  if (z.is_zero()) return {Complex(1), ctx.digits};
  const Complex rz = sqrt(z);
  const Complex value = Complex(4) * asin(rz / 2L) / (rz * sqrt(Complex(4) - z));
  return {value, ctx.digits};
}

/// S_0(z) = 4 (sqrt(4 - z) + sqrt(z) asin(sqrt(z)/2)) / (4 - z)^{3/2}.
inline ApComplex s0_closed(const Complex& z_in, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Complex z = rounded(z_in);
  detail::check_closed_domain(z);
  const Complex rz = sqrt(z);
  const Complex r4 = sqrt(Complex(4) - z);
  const Complex value = Complex(4) * (r4 + rz * asin(rz / 2L)) / (r4 * r4 * r4);
  return {value, ctx.digits};
}

/// sum_{n>=1} 1 / (n^3 C(3n,n) 2^n). The term ratio is below 1/10 for all n.
inline ApComplex chudnovsky_sum(const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real eps = working_epsilon();
  Real c(Rational(1, 6));  // 1/(C(3n,n) 2^n) at n = 1
  Real sum;
  for (long n = 1;; ++n) {
    Real term = c / pow(Real(n), 3);
    sum += term;
    if (term / 9 <= eps * sum) break;
    // C(3n+3, n+1) / C(3n, n) = (3n+3)(3n+2)(3n+1) / ((n+1)(2n+2)(2n+1))
    c *= (n + 1) * (2 * n + 2) * (2 * n + 1);
    c /= 2 * (3 * n + 3) * (3 * n + 2) * (3 * n + 1);
  }
  return {Complex(sum), ctx.digits};
}

// ---------------------------------------------------------------------------

/// Parameter w of the Li_2/Li_3 evaluation: |w| <= 1, Re w > 0, Im w >= 0,
/// |1 - w^2| <= 2|w|.
struct ChenFamilyParam {
  Complex w;

  static bool admissible(const Complex& w) {
    const Real slack = 1 + detail::boundary_slack();
    if (w.re.sign() <= 0 || w.im.sign() < 0) return false;
    if (abs(w) > slack) return false;
    return abs(Complex(1) - w * w) <= 2 * abs(w) * slack;
  }
  static ChenFamilyParam checked(const Complex& w) {
    if (!admissible(w)) fail(ErrorKind::domain, "w outside |w|<=1, Re w>0, Im w>=0, |1-w^2|<=2|w|");
    return {w};
  }
};

/// x S_3(-x^2) with x = (1 - w^2)/w.
inline ApComplex chen_family_lhs(const ChenFamilyParam& p, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Complex w = rounded(p.w);
  if (!ChenFamilyParam::admissible(w)) fail(ErrorKind::domain, "inadmissible w");
  const Complex x = (Complex(1) - w * w) / w;
  if (x.is_zero()) return {Complex(), ctx.digits};
  return {x * detail::s_value(3, -(x * x), ctx.digits), ctx.digits};
}

namespace detail {
// Li values at the four points (1 +- w)/2, (1 +- 1/w)/2. For real w the
// point (1 + 1/w)/2 sits on the cut; the Im w -> 0+ limit reaches it from
// below.
inline Complex chen_family_rhs_value(const Complex& w) {
  if (w.is_zero()) fail(ErrorKind::pole, "w = 0");
  const Complex inv = Complex(1) / w;
  const Complex a = (Complex(1) + w) / 2L;
  const Complex b = (Complex(1) - w) / 2L;
  const Complex c = (Complex(1) + inv) / 2L;
  const Complex d = (Complex(1) - inv) / 2L;
  const CutSide side = CutSide::lower;
  const Complex tri = li_value(3, a, side) - li_value(3, b, side) - li_value(3, c, side) + li_value(3, d, side);
  const Complex di = li_value(2, a, side) - li_value(2, b, side) + li_value(2, c, side) - li_value(2, d, side);
  const Complex pi_i(Real(0), pi());
  return -2L * tri + di * log(w) + pi_i * log(a) * log(c);
}
}  // namespace detail

/// -2[Li_3((1+w)/2) - Li_3((1-w)/2) - Li_3((1+1/w)/2) + Li_3((1-1/w)/2)]
/// + [Li_2((1+w)/2) - Li_2((1-w)/2) + Li_2((1+1/w)/2) - Li_2((1-1/w)/2)] log w
/// + pi i log((1+w)/2) log((1+1/w)/2).
inline ApComplex chen_family_rhs(const ChenFamilyParam& p, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  return {detail::chen_family_rhs_value(rounded(p.w)), ctx.digits};
}

namespace detail {
// x S_2(-x^2), x = (1 - w^2)/w, continued past |x| = 2 along the imaginary
// beta-integral parameter y = i x.
inline Complex k2_form_value(const Complex& w, int digits) {
  if (w.is_zero()) fail(ErrorKind::pole, "w = 0");
  const Complex x = (Complex(1) - w * w) / w;
  if (x.is_zero()) return Complex();
  const Complex z = -(x * x);
  if (abs(z) <= Real(kDirectSumRadius)) return x * s_direct(2, z);
  const Complex y = imag_unit() * x;
  return beta_integral_value(2, y, digits) / imag_unit();
}
}  // namespace detail

/// ((1 - w^2)/w) 3F2(1/2, 1, 1; 3/2, 3/2; -((1 - w^2)/w)^2 / 4).
inline ApComplex k2_hypergeometric_form(const Complex& w, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  return {detail::k2_form_value(rounded(w), ctx.digits), ctx.digits};
}

/// -2[Li_2(w) - Li_2(-w)] - 2 log w log((1-w)/(1+w)) + pi^2/2.
inline ApComplex k2_closed_form(const Complex& w_in, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Complex w = rounded(w_in);
  const Complex v = -2L * (detail::li_value(2, w) - detail::li_value(2, -w)) -
                    2L * log(w) * log((Complex(1) - w) / (Complex(1) + w)) + Complex(pi() * pi() / 2);
  return {v, ctx.digits};
}

}  // namespace ibs

#endif  // IBS_SERIES_HPP
