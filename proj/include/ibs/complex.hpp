#ifndef IBS_COMPLEX_HPP
#define IBS_COMPLEX_HPP

#include "ibs/real.hpp"

#include <ostream>
#include <string>

namespace ibs {

/// Complex number over Real. Elementary functions use principal branches:
/// log and sqrt have their cut on the negative real axis, with a zero
/// imaginary part (of either sign) treated as +0.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r) {}
  Complex(long r) : re(r) {}
  Complex(const Rational& r) : re(r) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
};

/// Copy rounded to the working precision.
inline Complex rounded(const Complex& z) { return {rounded(z.re), rounded(z.im)}; }

inline Complex imag_unit() { return Complex(Real(0), Real(1)); }

inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, const Real& k) { return {a.re * k, a.im * k}; }
inline Complex operator*(const Real& k, const Complex& a) { return a * k; }
inline Complex operator*(const Complex& a, long k) { return {a.re * k, a.im * k}; }
inline Complex operator*(long k, const Complex& a) { return a * k; }
inline Complex operator/(const Complex& a, const Real& k) { return {a.re / k, a.im / k}; }
inline Complex operator/(const Complex& a, long k) { return {a.re / k, a.im / k}; }

inline Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }
inline Real abs(const Complex& a) { return hypot(a.re, a.im); }
inline Complex conj(const Complex& a) { return {a.re, -a.im}; }

inline Complex operator/(const Complex& a, const Complex& b) {
  if (b.is_zero()) fail(ErrorKind::pole, "complex division by zero");
  if (b.im.is_zero()) return a / b.re;
  // Scale by the larger component to avoid overflow in |b|^2.
  if (abs(b.re) >= abs(b.im)) {
    Real r = b.im / b.re;
    Real d = b.re + b.im * r;
    return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
  }
  Real r = b.re / b.im;
  Real d = b.re * r + b.im;
  return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}
inline Complex operator/(long k, const Complex& b) { return Complex(k) / b; }

inline Complex& Complex::operator*=(const Complex& o) { return *this = *this * o; }
inline Complex& Complex::operator/=(const Complex& o) { return *this = *this / o; }

inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

/// Principal argument in (-pi, pi].
inline Real arg(const Complex& a) {
  if (a.im.is_zero()) return a.re.sign() < 0 ? pi() : Real(0);
  return atan2(a.im, a.re);
}

inline Complex log(const Complex& a) {
  if (a.is_zero()) fail(ErrorKind::pole, "log(0)");
  if (a.im.is_zero() && a.re.sign() > 0) return Complex(log(a.re));
  return {log(abs(a)), arg(a)};
}

inline Complex exp(const Complex& a) {
  Real m = exp(a.re);
  if (a.im.is_zero()) return Complex(m);
  return {m * cos(a.im), m * sin(a.im)};
}

inline Complex sqrt(const Complex& a) {
  if (a.im.is_zero()) {
    if (a.re.sign() >= 0) return Complex(sqrt(a.re));
    return {Real(0), sqrt(-a.re)};
  }
  Real r = abs(a);
  Real u = sqrt((r + abs(a.re)) / 2);
  // For re < 0 use the conjugate-stable form to avoid cancellation.
  if (a.re.sign() >= 0) return {u, a.im / (2 * u)};
  Real v = a.im.sign() < 0 ? -u : u;
  return {abs(a.im) / (2 * u), v};
}

inline Complex pow(const Complex& a, long n) {
  if (n < 0) return Complex(1) / pow(a, -n);
  Complex result(1);
  Complex base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

/// Principal arcsine, asin(z) = -i log(iz + sqrt(1 - z^2)).
inline Complex asin(const Complex& z) {
  if (z.im.is_zero() && abs(z.re) <= Real(1)) {
    Real r;
    mpfr_asin(r.raw(), z.re.raw(), MPFR_RNDN);
    return Complex(r);
  }
  Complex iz(-z.im, z.re);
  Complex w = log(iz + sqrt(Complex(1) - z * z));
  return {w.im, -w.re};
}

/// exp(i*pi*q) for rational q.
inline Complex exp_i_pi(const Rational& q) {
  Real t = pi() * Real(q);
  return {cos(t), sin(t)};
}

inline std::string to_string(const Complex& z, int digits) {
  if (z.im.is_zero()) return to_string(z.re, digits);
  if (z.re.is_zero()) return to_string(z.im, digits) + "i";
  std::string im = to_string(abs(z.im), digits);
  return to_string(z.re, digits) + (z.im.sign() < 0 ? " - " : " + ") + im + "i";
}

inline std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << to_string(z, 20); }

/// Result of a top-level evaluation: the value and the number of decimal
/// digits it is trusted to.
struct ApComplex {
  Complex value;
  int prec = 0;

  const Real& re() const { return value.re; }
  const Real& im() const { return value.im; }
};

inline void require_finite(const Complex& z, const char* where) {
  if (!z.is_finite()) fail(ErrorKind::domain, std::string("non-finite value in ") + where);
}

/// -log10(|a - b| / max(1, |b|)), capped at `cap`.
inline double agreement_digits(const Complex& a, const Complex& b, double cap) {
  Real diff = abs(a - b);
  if (diff.is_zero()) return cap;
  Real scale = max(Real(1), abs(b));
  return std::min(cap, -(diff / scale).log10_abs());
}

}  // namespace ibs

#endif  // IBS_COMPLEX_HPP
