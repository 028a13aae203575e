#ifndef IBS_HURWITZ_HPP
#define IBS_HURWITZ_HPP

#include "ibs/bernoulli.hpp"
#include "ibs/complex.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace ibs {

namespace detail {

// zeta(s, a) at the working precision by Euler-Maclaurin: a direct sum of
// M terms plus the integral and Bernoulli corrections. For real s > 1 the
// remainder after the last correction is bounded by the first omitted one.
inline Real hurwitz_zeta_value(int s, const Rational& a) {
  if (s < 2) fail(ErrorKind::domain, "hurwitz_zeta needs s >= 2");
  if (a <= 0 || a > 1) fail(ErrorKind::domain, "hurwitz_zeta needs 0 < a <= 1");
  const Real eps = working_epsilon();
  const Real ar(a);
  const long digits = static_cast<long>(working_bits() * 0.30103) + 1;
  long m = std::max(10L, digits / 2);
  for (int attempt = 0; attempt < 6; ++attempt, m *= 2) {
    Real sum;
    for (long n = 0; n < m; ++n) sum += 1 / pow(ar + n, s);
    const Real x = ar + m;
    Real x_pow = pow(x, -s);  // (M+a)^{-s}
    sum += x_pow * x / (s - 1) + x_pow / 2;
    // T_j = B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^{-s-2j+1}
    Real rising(s);
    Real fact(2);
    Real xp = x_pow / x;
    const Real inv_x2 = 1 / (x * x);
    Real previous;
    bool converged = false;
    for (long j = 1; j < 4 * digits + 40; ++j) {
      if (j > 1) {
        rising *= (s + 2 * j - 3);
        rising *= (s + 2 * j - 2);
        fact *= (2 * j - 1);
        fact *= (2 * j);
        xp *= inv_x2;
      }
      Real term = Real(bernoulli(static_cast<std::size_t>(2 * j))) / fact * rising * xp;
      Real mag = abs(term);
      if (j > 1 && mag > previous) break;  // asymptotic series started to diverge
      sum += term;
      if (mag <= eps * abs(sum)) {
        converged = true;
        break;
      }
      previous = mag;
    }
    if (converged) return sum;
  }
  fail(ErrorKind::precision_unreachable, "hurwitz_zeta tail bound not met");
}

struct ZetaMemo {
  std::mutex mu;
  std::map<std::pair<int, mpfr_prec_t>, Real> values;
};

inline ZetaMemo& zeta_memo() {
  static ZetaMemo memo;
  return memo;
}

}  // namespace detail

/// Riemann zeta(n), n >= 2, at the working precision (memoised per precision).
inline Real zeta_value(int n) {
  auto& memo = detail::zeta_memo();
  const auto key = std::make_pair(n, working_bits());
  {
    std::lock_guard lock(memo.mu);
    auto it = memo.values.find(key);
    if (it != memo.values.end()) return it->second;
  }
  Real v = detail::hurwitz_zeta_value(n, Rational(1));
  std::lock_guard lock(memo.mu);
  memo.values.emplace(key, v);
  return v;
}

/// Hurwitz zeta(s, a) = sum_{n>=0} (n + a)^{-s} for integer s >= 2 and
/// rational 0 < a <= 1.
inline ApComplex hurwitz_zeta(int s, const Rational& a, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  return {Complex(detail::hurwitz_zeta_value(s, a)), ctx.digits};
}

}  // namespace ibs

#endif  // IBS_HURWITZ_HPP
