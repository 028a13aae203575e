#ifndef IBS_PARSE_HPP
#define IBS_PARSE_HPP

// Text grammar for complex points:
//   a/b, decimals (exact), x+yi, x-yi, yi, i, -i, exp(i*pi*p/q)

#include "ibs/constants.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ibs {

namespace detail {

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

// Coefficient in front of a trailing i: "", "+", "-" mean +-1.
inline Rational imaginary_coefficient(const std::string& s) {
  if (s.empty() || s == "+") return Rational(1);
  if (s == "-") return Rational(-1);
  std::string t = s;
  if (!t.empty() && t.back() == '*') t.pop_back();
  return parse_rational(t);
}

}  // namespace detail

/// Parses one point of the grammar into an exact expression. Every form but
/// exp(...) yields a Gaussian rational.
inline Expr parse_point(std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  if (s.empty()) fail(ErrorKind::parse, "empty point");

  const std::string exp_head = "exp(";
  if (s.rfind(exp_head, 0) == 0) {
    if (s.back() != ')') fail(ErrorKind::parse, "unterminated exp(: " + s);
    std::string body = s.substr(exp_head.size(), s.size() - exp_head.size() - 1);
    Rational sign(1);
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
      if (body[0] == '-') sign = -1;
      body.erase(0, 1);
    }
    const std::string prefix = "i*pi";
    if (body.rfind(prefix, 0) != 0) fail(ErrorKind::parse, "expected exp(i*pi*p/q): " + s);
    std::string rest = body.substr(prefix.size());
    Rational q(1);
    if (!rest.empty()) {
      if (rest[0] != '*') fail(ErrorKind::parse, "expected exp(i*pi*p/q): " + s);
      q = parse_rational(rest.substr(1));
    }
    return exp_i_pi_of(sign * q);
  }

  if (s.back() == 'i') {
    const std::string head = s.substr(0, s.size() - 1);
    // Split at the last sign that is neither leading nor an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t j = head.size(); j-- > 1;) {
      if ((head[j] == '+' || head[j] == '-') && head[j - 1] != 'e' && head[j - 1] != 'E') {
        split = j;
        break;
      }
    }
    if (split == std::string::npos) {
      const Rational im = detail::imaginary_coefficient(head);
      return im * imag();
    }
    const Rational re = parse_rational(head.substr(0, split));
    const Rational im = detail::imaginary_coefficient(head.substr(split));
    return lit(re) + im * imag();
  }
  return lit(parse_rational(s));
}

/// Comma-separated list of points (GPL letters).
inline std::vector<Expr> parse_point_list(std::string_view text) {
  std::vector<Expr> out;
  std::string item;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(parse_point(item));
      item.clear();
    } else {
      item.push_back(c);
    }
  }
  out.push_back(parse_point(item));
  return out;
}

/// Non-negative or signed decimal integer, no trailing characters.
inline long parse_integer(std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  if (s.empty()) fail(ErrorKind::parse, "empty integer");
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    fail(ErrorKind::parse, "not an integer: " + s);
  }
  if (pos != s.size()) fail(ErrorKind::parse, "not an integer: " + s);
  return v;
}

}  // namespace ibs

#endif  // IBS_PARSE_HPP
