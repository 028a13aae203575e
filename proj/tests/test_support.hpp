#pragma once

// Shared oracles and helpers for the unit tests. Nothing here calls the
// library routine it is used to check.

#include "ibs/ibs.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace ibs_test {

using ibs::Complex;
using ibs::Rational;
using ibs::Real;

inline double agree(const Complex& a, const Complex& b) { return ibs::agreement_digits(a, b, 1000.0); }

/// Deterministic source of small exact inputs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  /// Uniform rational in [lo, hi] with denominator `den`.
  Rational rational(double lo, double hi, long den = 97) {
    const long a = static_cast<long>(std::ceil(lo * den));
    const long b = static_cast<long>(std::floor(hi * den));
    Rational r(integer(a, b), den);
    r.canonicalize();
    return r;
  }

  /// Gaussian rational with modulus in [rmin, rmax] (rejection sampled).
  ibs::GaussianRational gaussian(double rmin, double rmax, long den = 97) {
    for (;;) {
      ibs::GaussianRational g{rational(-rmax, rmax, den), rational(-rmax, rmax, den)};
      const double m = std::hypot(g.re.get_d(), g.im.get_d());
      if (m >= rmin && m <= rmax) return g;
    }
  }

 private:
  std::mt19937_64 gen_;
};

/// sum_{k>=0} (-1)^k a(k) by the Cohen-Rodriguez Villegas-Zagier
/// acceleration; exact for moment sequences up to about 5.8^-n.
inline Real alternating_sum(const std::function<Real(long)>& a, int n) {
  Real d = pow(3 + sqrt(Real(8)), n);
  d = (d + 1 / d) / 2;
  Real b(-1);
  Real c = -d;
  Real s;
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b *= Real((k + n) * (k - n));
    b /= (Real(k) + Real(1) / 2) * (k + 1);
  }
  return s / d;
}

inline Complex g1(const Complex& a, const Complex& t) {
  if (a.is_zero()) return log(t);
  return log(Complex(1) - t / a);
}

/// G(a1, ..., an; z) for n <= 3 with a nonzero last letter, by one
/// tanh-sinh integral along [0, z]:
///   G(a; z)        = log(1 - z/a)
///   G(a, b; z)     = int_0^z G(b; t) / (t - a) dt
///   G(a, b, c; z)  = int_0^z G(c; t) (G(a; z) - G(a; t)) / (t - b) dt
/// (the last after exchanging the two outer integrations; valid while no
/// letter lies on the segment, so the logs stay continuous).
inline Complex gpl_by_quadrature(const std::vector<Complex>& a, const Complex& z, int digits) {
  const Real tol = pow(Real(10), -digits);
  if (a.size() == 1) return g1(a[0], z);
  if (a.size() == 2) {
    auto f = [&](const Complex& t) { return g1(a[1], t) / (t - a[0]); };
    return ibs::detail::tanh_sinh(f, Complex(0), z, tol, digits).value.value;
  }
  if (a.size() == 3) {
    const Complex outer = g1(a[0], z);
    auto f = [&](const Complex& t) { return g1(a[2], t) * (outer - g1(a[0], t)) / (t - a[1]); };
    return ibs::detail::tanh_sinh(f, Complex(0), z, tol, digits).value.value;
  }
  ibs::fail(ibs::ErrorKind::domain, "quadrature oracle handles length <= 3");
}

}  // namespace ibs_test
