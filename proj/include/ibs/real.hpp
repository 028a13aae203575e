#ifndef IBS_REAL_HPP
#define IBS_REAL_HPP

// Arbitrary-precision real numbers over MPFR, a thread-local working
// precision, and the error type shared by every module.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ibs {

using Rational = mpq_class;
using Integer = mpz_class;

enum class ErrorKind {
  domain,                 // argument outside the operation's domain
  divergent,              // series or iterated integral does not converge
  pole,                   // evaluation at a singular point
  precision_unreachable,  // target accuracy not met within iteration caps
  branch,                 // branch cut crossing on an integration path
  parse,                  // malformed textual input
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::divergent: return "divergent";
    case ErrorKind::pole: return "pole";
    case ErrorKind::precision_unreachable: return "precision-unreachable";
    case ErrorKind::branch: return "branch";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

/// Decimal precision requested by a caller. Operations compute at
/// `digits + guard` and report at `digits`.
struct PrecisionCtx {
  int digits = 40;
  int guard = 10;

  PrecisionCtx() = default;
  PrecisionCtx(int d, int g = 10) : digits(d), guard(g) {
    if (d < 10) fail(ErrorKind::domain, "precision must be at least 10 digits");
    if (g < 0) fail(ErrorKind::domain, "guard digits must be non-negative");
  }

  int working_digits() const { return digits + guard; }
  PrecisionCtx with_guard(int g) const { return PrecisionCtx(digits, g); }
};

inline mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 8;
}

namespace detail {
inline mpfr_prec_t& working_bits_ref() {
  thread_local mpfr_prec_t bits = 256;
  return bits;
}
}  // namespace detail

inline mpfr_prec_t working_bits() { return detail::working_bits_ref(); }

/// Sets the thread's working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t bits) : saved_(detail::working_bits_ref()) {
    detail::working_bits_ref() = bits;
  }
  explicit PrecisionScope(const PrecisionCtx& ctx)
      : PrecisionScope(bits_for_digits(ctx.working_digits())) {}
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;
  ~PrecisionScope() { detail::working_bits_ref() = saved_; }

 private:
  mpfr_prec_t saved_;
};

/// MPFR value. New values take the thread's working precision; copies keep
/// the precision of their source.
class Real {
 public:
  Real() {
    mpfr_init2(v_, working_bits());
    mpfr_set_zero(v_, 1);
  }
  Real(int x) : Real(static_cast<long>(x)) {}
  Real(long x) {
    mpfr_init2(v_, working_bits());
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(double x) {
    mpfr_init2(v_, working_bits());
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(const Rational& q) {
    mpfr_init2(v_, working_bits());
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(const Integer& z) {
    mpfr_init2(v_, working_bits());
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  explicit Real(std::string_view decimal) {
    mpfr_init2(v_, working_bits());
    std::string s(decimal);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
      mpfr_clear(v_);
      fail(ErrorKind::parse, "not a decimal number: " + s);
    }
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent2() const { return is_zero() ? -(1L << 40) : static_cast<long>(mpfr_get_exp(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// log10|x| as a double, safe far outside the double exponent range.
  double log10_abs() const {
    if (is_zero()) return -1e300;
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
  }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
  Real& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }

 private:
  mpfr_t v_;
};

namespace detail {
template <class Op>
Real unary(const Real& a, Op op) {
  Real r;
  op(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
}  // namespace detail

inline Real operator-(const Real& a) { return detail::unary(a, mpfr_neg); }
inline Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real operator*(const Real& a, long k) { Real r; mpfr_mul_si(r.raw(), a.raw(), k, MPFR_RNDN); return r; }
inline Real operator*(long k, const Real& a) { return a * k; }
inline Real operator/(const Real& a, long k) { Real r; mpfr_div_si(r.raw(), a.raw(), k, MPFR_RNDN); return r; }
inline Real operator/(long k, const Real& a) { Real r; mpfr_si_div(r.raw(), k, a.raw(), MPFR_RNDN); return r; }
inline Real operator+(const Real& a, long k) { Real r; mpfr_add_si(r.raw(), a.raw(), k, MPFR_RNDN); return r; }
inline Real operator+(long k, const Real& a) { return a + k; }
inline Real operator-(const Real& a, long k) { Real r; mpfr_sub_si(r.raw(), a.raw(), k, MPFR_RNDN); return r; }
inline Real operator-(long k, const Real& a) { Real r; mpfr_si_sub(r.raw(), k, a.raw(), MPFR_RNDN); return r; }

inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }

inline Real abs(const Real& a) { return detail::unary(a, mpfr_abs); }
inline Real sqrt(const Real& a) { return detail::unary(a, mpfr_sqrt); }
inline Real exp(const Real& a) { return detail::unary(a, mpfr_exp); }
inline Real log(const Real& a) { return detail::unary(a, mpfr_log); }
inline Real log1p(const Real& a) { return detail::unary(a, mpfr_log1p); }
inline Real sin(const Real& a) { return detail::unary(a, mpfr_sin); }
inline Real cos(const Real& a) { return detail::unary(a, mpfr_cos); }
inline Real sinh(const Real& a) { return detail::unary(a, mpfr_sinh); }
inline Real cosh(const Real& a) { return detail::unary(a, mpfr_cosh); }
inline Real asinh(const Real& a) { return detail::unary(a, mpfr_asinh); }
inline Real atan2(const Real& y, const Real& x) { Real r; mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real hypot(const Real& x, const Real& y) { Real r; mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN); return r; }
inline Real pow(const Real& a, long n) { Real r; mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN); return r; }
inline Real ldexp(const Real& a, long e) { Real r; mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN); return r; }
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return b < a ? b : a; }

/// Copy of x rounded to the working precision.
inline Real rounded(const Real& x) {
  Real r;
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

inline Real pi() {
  Real r;
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

/// 2^(-bits) at the working precision; the relative target of series loops.
inline Real working_epsilon() { return ldexp(Real(1), -static_cast<long>(working_bits())); }

/// Decimal rendering with `digits` significant digits. Trailing zeros are
/// dropped; plain notation is used for moderate exponents.
inline std::string to_string(const Real& x, int digits) {
  if (x.is_zero()) return "0";
  if (!x.is_finite()) return mpfr_nan_p(x.raw()) ? "nan" : (x.sign() > 0 ? "inf" : "-inf");
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(std::max(digits, 1)), x.raw(), MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  bool neg = false;
  if (!mant.empty() && mant[0] == '-') {
    neg = true;
    mant.erase(0, 1);
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  std::string out;
  const long exp10 = static_cast<long>(e);  // value = 0.mant * 10^exp10
  if (exp10 > 0 && exp10 <= 30) {
    if (static_cast<long>(mant.size()) <= exp10) {
      out = mant + std::string(static_cast<size_t>(exp10) - mant.size(), '0');
    } else {
      out = mant.substr(0, static_cast<size_t>(exp10)) + "." + mant.substr(static_cast<size_t>(exp10));
    }
  } else if (exp10 <= 0 && exp10 > -8) {
    out = "0." + std::string(static_cast<size_t>(-exp10), '0') + mant;
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(exp10 - 1);
  }
  return neg ? "-" + out : out;
}

/// Exact conversion of a decimal literal ("-12.5e-3", "7", "1/3") to a rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(ErrorKind::parse, "empty number");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational num = parse_rational(s.substr(0, slash));
    Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) fail(ErrorKind::parse, "zero denominator in " + s);
    Rational q = num / den;
    q.canonicalize();
    return q;
  }
  size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_dot = false;
  bool any = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      any = true;
      if (seen_dot) ++scale;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!any) fail(ErrorKind::parse, "not a number: " + s);
  long exp10 = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') fail(ErrorKind::parse, "not a number: " + s);
    char* end = nullptr;
    const std::string tail = s.substr(pos + 1);
    exp10 = std::strtol(tail.c_str(), &end, 10);
    if (tail.empty() || *end != '\0') fail(ErrorKind::parse, "bad exponent in " + s);
  }
  Integer mant(digits, 10);
  Integer ten_pow;
  const long shift = exp10 - scale;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational q = shift >= 0 ? Rational(mant * ten_pow) : Rational(mant, ten_pow);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

}  // namespace ibs

#endif  // IBS_REAL_HPP
