#ifndef IBS_QUADRATURE_HPP
#define IBS_QUADRATURE_HPP

// Tanh-sinh quadrature along straight segments of the complex plane.

#include "ibs/complex.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace ibs {

struct Segment {
  Complex z0;
  Complex z1;
};

struct QuadResult {
  ApComplex value;
  Real error_estimate;  // |I_L - I_{L-1}| at the final level
  int levels_used = 0;
};

inline constexpr int kQuadratureLevelCap = 12;

namespace detail {

// Abscissa x = tanh(u), u = (pi/2) sinh t, stored through its distance to
// the nearer endpoint so that nodes next to a singular endpoint keep full
// relative accuracy. side: -1 near z0, +1 near z1, 0 for the midpoint.
struct TanhSinhNode {
  Real complement;  // 1 + x for side -1, 1 - x for side +1
  Real weight;      // dx/dt = (pi/2) cosh t / cosh^2 u
  int side = 0;
};

using NodeTable = std::shared_ptr<const std::vector<TanhSinhNode>>;

// Largest t whose complement stays above 2^{-(bits-8)}.
inline double tanh_sinh_t_max(mpfr_prec_t bits) {
  const double u_max = (static_cast<double>(bits) - 8) * 0.6931471805599453 / 2;
  return std::asinh(2 * u_max / 3.141592653589793);
}

inline TanhSinhNode make_node(const Real& t) {
  const Real half_pi = pi() / 2;
  const Real u = half_pi * sinh(t);
  const Real cu = cosh(u);
  TanhSinhNode n;
  n.weight = half_pi * cosh(t) / (cu * cu);
  if (t.is_zero()) {
    n.complement = 1;
    n.side = 0;
  } else if (t.sign() < 0) {
    n.complement = exp(u) / cu;
    n.side = -1;
  } else {
    n.complement = exp(-u) / cu;
    n.side = 1;
  }
  return n;
}

// Nodes new at `level`: t = k for level 0, odd multiples of 2^-level after.
inline NodeTable tanh_sinh_level(int level) {
  static std::mutex mu;
  static std::map<std::pair<mpfr_prec_t, int>, NodeTable> cache;
  const auto key = std::make_pair(working_bits(), level);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const double t_max = tanh_sinh_t_max(working_bits());
  auto nodes = std::make_shared<std::vector<TanhSinhNode>>();
  if (level == 0) {
    const long k_max = static_cast<long>(std::floor(t_max));
    for (long k = -k_max; k <= k_max; ++k) nodes->push_back(make_node(Real(k)));
  } else {
    const long steps = 1L << level;
    const long j_max = static_cast<long>(std::floor(t_max * static_cast<double>(steps)));
    for (long j = -j_max; j <= j_max; ++j) {
      if ((j & 1) == 0) continue;
      nodes->push_back(make_node(ldexp(Real(j), -level)));
    }
  }
  NodeTable table = nodes;
  std::lock_guard lock(mu);
  cache.emplace(key, table);
  return table;
}

// Integral of f along [z0, z1] at the working precision. Stops once two
// successive levels agree to `tolerance` relative to max(1, |I|).
template <class F>
QuadResult tanh_sinh(F&& f, const Complex& z0, const Complex& z1, const Real& tolerance, int digits,
                     int level_cap = kQuadratureLevelCap) {
  if (z0 == z1) fail(ErrorKind::domain, "degenerate segment");
  const Complex span = z1 - z0;
  const Complex half = span / 2;
  const Complex mid = (z0 + z1) / 2;
  Complex total;
  Complex previous;
  for (int level = 0; level <= level_cap; ++level) {
    const NodeTable nodes = tanh_sinh_level(level);
    for (const auto& n : *nodes) {
      Complex z;
      if (n.side == 0) {
        z = mid;
      } else if (n.side < 0) {
        z = z0 + half * n.complement;
      } else {
        z = z1 - half * n.complement;
      }
      Complex v = f(z);
      if (!v.is_finite()) fail(ErrorKind::domain, "non-finite integrand sample");
      total += v * n.weight;
    }
    const Complex estimate = ldexp(Real(1), -level) * total * half;
    if (level >= 3) {
      Real diff = abs(estimate - previous);
      if (diff <= tolerance * max(Real(1), abs(estimate))) {
        return {{estimate, digits}, diff, level};
      }
    }
    previous = estimate;
  }
  fail(ErrorKind::precision_unreachable, "tanh-sinh level cap reached");
}

}  // namespace detail

/// Integral of f(z) dz along the straight segment z0 -> z1. Level doubling
/// stops when successive levels agree to ctx.digits; endpoint logarithmic
/// singularities need no subdivision. `f` is called as f(const Complex&)
/// at the working precision and returns Complex.
template <class F>
QuadResult integrate_segment(F&& f, const Segment& seg, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real tol = pow(Real(10), -ctx.digits);
  return detail::tanh_sinh(f, rounded(seg.z0), rounded(seg.z1), tol, ctx.digits);
}

}  // namespace ibs

#endif  // IBS_QUADRATURE_HPP
