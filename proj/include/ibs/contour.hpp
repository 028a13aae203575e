#ifndef IBS_CONTOUR_HPP
#define IBS_CONTOUR_HPP

// Integral representations of the inverse binomial series, evaluated by
// tanh-sinh quadrature: a real beta-type integral and a two-segment contour
// along the imaginary axis.

#include "ibs/constants.hpp"
#include "ibs/polylog.hpp"
#include "ibs/quadrature.hpp"

#include <string>

namespace ibs {

namespace detail {

inline Real quad_tolerance(int digits) { return pow(Real(10), -digits); }

// 2 int_0^1 [Li_{k-1}(y u) - Li_{k-1}(-y u)] / (1 + t^2) dt, u = t/(1 + t^2),
// which equals y S_k(y^2) for |y| <= 2 and continues it analytically to
// every y off the real rays |y| > 2 (where +-y u would meet the Li cut).
inline Complex beta_integral_value(int k, const Complex& y, int digits) {
  if (k < 2) fail(ErrorKind::domain, "beta integral needs k >= 2");
  if (y.im.is_zero() && abs(y.re) > 2 * (1 + ldexp(Real(1), 16 - static_cast<long>(working_bits())))) {
    fail(ErrorKind::divergent, "beta integral parameter on the real rays |y| > 2");
  }
  if (y.is_zero()) return Complex();
  auto f = [&](const Complex& t) {
    const Complex d = Complex(1) + t * t;
    const Complex yu = y * t / d;
    return (li_value(k - 1, yu) - li_value(k - 1, -yu)) / d;
  };
  QuadResult r = tanh_sinh(f, Complex(0), Complex(1), quad_tolerance(digits), digits);
  return r.value.value * 2L;
}

// Samples the log argument along [a, b] and bisects any step whose arg
// changes by more than pi/2. A jump that survives bisection is a crossing
// of the principal cut.
template <class G>
void assert_branch_continuity(G&& log_argument, const Complex& a, const Complex& b) {
  constexpr int kSamples = 128;
  constexpr int kBisections = 48;
  const Real quarter_turn = pi() / 2;
  auto at = [&](const Real& s) { return a + (b - a) * s; };
  auto arg_at = [&](const Real& s) { return arg(log_argument(at(s))); };
  auto jump = [&](const Real& x, const Real& y) { return abs(x - y) > quarter_turn; };
  Real s_prev = Real(1) / (2 * kSamples);
  Real arg_prev = arg_at(s_prev);
  for (int j = 1; j < kSamples; ++j) {
    Real s = (Real(j) + Real(1) / 2) / kSamples;
    Real arg_now = arg_at(s);
    if (jump(arg_prev, arg_now)) {
      Real lo = s_prev;
      Real hi = s;
      Real arg_lo = arg_prev;
      Real arg_hi = arg_now;
      int steps = 0;
      for (; steps < kBisections && jump(arg_lo, arg_hi); ++steps) {
        Real mid = (lo + hi) / 2;
        Real arg_mid = arg_at(mid);
        if (jump(arg_lo, arg_mid)) {
          hi = mid;
          arg_hi = arg_mid;
        } else {
          lo = mid;
          arg_lo = arg_mid;
        }
      }
      if (jump(arg_lo, arg_hi)) fail(ErrorKind::branch, "contour integrand crosses the logarithm cut");
    }
    s_prev = s;
    arg_prev = arg_now;
  }
}

inline Complex genchen_value(int k, const Complex& w, int digits) {
  if (k < 2 || k > 6) fail(ErrorKind::domain, "genchen_contour needs 2 <= k <= 6");
  if (w.is_zero() || w.re.sign() <= 0) fail(ErrorKind::domain, "genchen_contour needs Re w > 0");
  if (w == Complex(1)) return Complex();
  const Complex i = imag_unit();
  const Complex c = (Complex(1) - w * w) / (i * w);
  Real fact(1);
  for (int j = 2; j <= k - 2; ++j) fact *= j;

  auto make_log_argument = [](const Complex& scale) {
    return [scale](const Complex& z) { return scale * z / (Complex(1) + z * z); };
  };
  auto make_integrand = [k](auto log_argument) {
    return [k, log_argument](const Complex& z) {
      const Complex one_plus = Complex(1) + z * z;
      const Complex lz = log(z / imag_unit());
      const Complex lp = k > 2 ? pow(log(log_argument(z)), k - 2) : Complex(1);
      return lp * lz / one_plus;
    };
  };

  const Complex lower = i * w;
  const Complex upper = i / w;
  const auto arg1 = make_log_argument(c);
  const auto arg2 = make_log_argument(-c);
  if (k > 2) {
    assert_branch_continuity(arg1, lower, i);
    assert_branch_continuity(arg2, i, upper);
  }
  const Real tol = quad_tolerance(digits);
  Complex first = tanh_sinh(make_integrand(arg1), lower, i, tol, digits).value.value;
  Complex second = tanh_sinh(make_integrand(arg2), i, upper, tol, digits).value.value;
  return Complex(Real(0), 2 / fact) * (first + second);
}

}  // namespace detail

/// y S_k(y^2) through the beta-type integral; y real needs |y| <= 2.
inline ApComplex beta_integral(int k, const Complex& y, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  return {detail::beta_integral_value(k, rounded(y), ctx.digits), ctx.digits};
}

/// 2 int_0^1 [Li_2(x/(1+x^2)) - Li_2(-x/(1+x^2))]/(1+x^2) dx = S_3(1).
inline ApComplex chen1_integral(const PrecisionCtx& ctx) { return beta_integral(3, Complex(1), ctx); }

/// Sum_n (-1)^n x^{2n+1} / ((2n+1)^k C(2n,n)), x = (1 - w^2)/w, as
///   (2i/(k-2)!) [ int_{iw}^{i} log^{k-2}(c z/(1+z^2)) log(z/i)/(1+z^2) dz
///               + int_{i}^{i/w} log^{k-2}(-c z/(1+z^2)) log(z/i)/(1+z^2) dz ],
/// c = (1 - w^2)/(iw). Needs Re w > 0 (both iw and i/w in the upper half
/// plane); principal logs must stay continuous along both segments.
inline ApComplex genchen_contour(int k, const Complex& w, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  return {detail::genchen_value(k, rounded(w), ctx.digits), ctx.digits};
}

/// The k = 3 contour at w = 1/phi, equal to S_3(-1).
inline ApComplex chen2_contour(const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Complex w((sqrt(Real(5)) - 1) / 2);
  return {detail::genchen_value(3, w, ctx.digits), ctx.digits};
}

}  // namespace ibs

#endif  // IBS_CONTOUR_HPP
