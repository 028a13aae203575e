#ifndef IBS_CONSTANTS_HPP
#define IBS_CONSTANTS_HPP

// Named constants of the closed forms and an immutable expression tree over
// them, rationals, radicals and polylogarithm leaves.

#include "ibs/hurwitz.hpp"
#include "ibs/polylog.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ibs {

enum class Named {
  pi,
  catalan_G,
  zeta3,
  beta4,
  L_8_2_3,
  L_8_4_4,
  L_3_2_4,
  L_12_4_3,
  mathcal_G,  // Im Li_3((1+i)/2)
  lam,        // log 2
  Lam,        // log 3
  pound,      // log phi
  scriptL,    // log 5
  lam_tilde,  // log(1 + sqrt 2)
  Lam_tilde,  // log(2 + sqrt 3)
  phi,        // (1 + sqrt 5)/2
};

inline constexpr std::array<Named, 16> kAllNamed = {
    Named::pi,        Named::catalan_G, Named::zeta3,   Named::beta4,     Named::L_8_2_3,  Named::L_8_4_4,
    Named::L_3_2_4,   Named::L_12_4_3,  Named::mathcal_G, Named::lam,     Named::Lam,      Named::pound,
    Named::scriptL,   Named::lam_tilde, Named::Lam_tilde, Named::phi};

inline const char* name_of(Named n) {
  switch (n) {
    case Named::pi: return "pi";
    case Named::catalan_G: return "catalan_G";
    case Named::zeta3: return "zeta3";
    case Named::beta4: return "beta4";
    case Named::L_8_2_3: return "L_8_2_3";
    case Named::L_8_4_4: return "L_8_4_4";
    case Named::L_3_2_4: return "L_3_2_4";
    case Named::L_12_4_3: return "L_12_4_3";
    case Named::mathcal_G: return "mathcal_G";
    case Named::lam: return "lam";
    case Named::Lam: return "Lam";
    case Named::pound: return "pound";
    case Named::scriptL: return "scriptL";
    case Named::lam_tilde: return "lam_tilde";
    case Named::Lam_tilde: return "Lam_tilde";
    case Named::phi: return "phi";
  }
  return "?";
}

inline std::optional<Named> named_from_string(std::string_view s) {
  for (Named n : kAllNamed)
    if (s == name_of(n)) return n;
  return std::nullopt;
}

namespace detail {

// sum_j c_j zeta(s, a_j) / q^s
inline Real periodic_zeta(int s, long q, std::initializer_list<std::pair<long, int>> residues) {
  Real sum;
  for (const auto& [r, c] : residues) {
    Real z = hurwitz_zeta_value(s, Rational(r, q));
    if (c > 0) sum += z; else sum -= z;
  }
  return sum / pow(Real(q), s);
}

inline Real compute_named(Named n) {
  switch (n) {
    case Named::pi: return pi();
    case Named::catalan_G: return periodic_zeta(2, 4, {{1, 1}, {3, -1}});
    case Named::zeta3: return zeta_value(3);
    case Named::beta4: return periodic_zeta(4, 4, {{1, 1}, {3, -1}});
    case Named::L_8_2_3: return periodic_zeta(3, 8, {{1, 1}, {3, -1}, {5, -1}, {7, 1}});
    case Named::L_8_4_4: return periodic_zeta(4, 8, {{1, 1}, {3, 1}, {5, -1}, {7, -1}});
    case Named::L_3_2_4: return periodic_zeta(4, 3, {{1, 1}, {2, -1}});
    case Named::L_12_4_3: return periodic_zeta(3, 12, {{1, 1}, {5, -1}, {7, -1}, {11, 1}});
    case Named::mathcal_G: {
      const Complex p(Real(1) / 2, Real(1) / 2);
      return li_value(3, p).im;
    }
    case Named::lam: return log(Real(2));
    case Named::Lam: return log(Real(3));
    case Named::pound: return log((1 + sqrt(Real(5))) / 2);
    case Named::scriptL: return log(Real(5));
    case Named::lam_tilde: return log(1 + sqrt(Real(2)));
    case Named::Lam_tilde: return log(2 + sqrt(Real(3)));
    case Named::phi: return (1 + sqrt(Real(5))) / 2;
  }
  fail(ErrorKind::domain, "unknown constant");
}

}  // namespace detail

/// Value of a named constant at the working precision, memoised per precision.
inline Real named_value(Named n) {
  static std::mutex mu;
  static std::map<std::pair<Named, mpfr_prec_t>, Real> memo;
  const auto key = std::make_pair(n, working_bits());
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Real v = detail::compute_named(n);
  std::lock_guard lock(mu);
  memo.emplace(key, v);
  return v;
}

inline ApComplex named_constant(Named n, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  return {Complex(named_value(n)), ctx.digits};
}

// ---------------------------------------------------------------------------
// Expression trees

class Expr;

namespace expr {
struct Lit { Rational value; };
struct SqrtLit { Rational radicand; };  // positive square root of a positive rational
struct Const { Named name; };
struct ImagUnit {};
struct ExpIPi { Rational q; };  // exp(i pi q)
struct Log;
struct Li;
struct Mpl;
struct Re;
struct Im;
struct Sum;
struct Product;
struct Power;
struct Scaled;
}  // namespace expr

/// Immutable, shareable expression. Copies share structure.
class Expr {
 public:
  struct Node;

  Expr(int v);
  Expr(const Rational& v);
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  const Node& node() const { return *node_; }
  const std::shared_ptr<const Node>& ptr() const { return node_; }

 private:
  std::shared_ptr<const Node> node_;
};

namespace expr {
struct Log { Expr arg; };
struct Li { int s; Expr point; CutSide side; };
struct Mpl { std::vector<int> weights; std::vector<Expr> args; };
struct Re { Expr arg; };
struct Im { Expr arg; };
struct Sum { std::vector<Expr> terms; };
struct Product { std::vector<Expr> factors; };
struct Power { Expr base; int exponent; };
struct Scaled { Rational coefficient; Expr arg; };
}  // namespace expr

struct Expr::Node {
  std::variant<expr::Lit, expr::SqrtLit, expr::Const, expr::ImagUnit, expr::ExpIPi, expr::Log, expr::Li, expr::Mpl,
               expr::Re, expr::Im, expr::Sum, expr::Product, expr::Power, expr::Scaled>
      v;
};

namespace detail {
template <class T>
Expr make_expr(T&& t) {
  return Expr(std::make_shared<const Expr::Node>(Expr::Node{std::forward<T>(t)}));
}
}  // namespace detail

inline Expr::Expr(int v) : Expr(detail::make_expr(expr::Lit{Rational(v)})) {}
inline Expr::Expr(const Rational& v) : Expr(detail::make_expr(expr::Lit{v})) {}

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Expr lit(const Rational& v) { return Expr(v); }
inline Expr sqrt_of(const Rational& v) {
  if (v <= 0) fail(ErrorKind::domain, "sqrt_of needs a positive rational");
  return detail::make_expr(expr::SqrtLit{v});
}
inline Expr constant(Named n) { return detail::make_expr(expr::Const{n}); }
inline Expr imag() { return detail::make_expr(expr::ImagUnit{}); }
inline Expr exp_i_pi_of(const Rational& q) { return detail::make_expr(expr::ExpIPi{q}); }
inline Expr log_of(const Expr& e) { return detail::make_expr(expr::Log{e}); }
inline Expr li_of(int s, const Expr& point, CutSide side = CutSide::automatic) {
  if (s < 1) fail(ErrorKind::domain, "Li order must be positive");
  return detail::make_expr(expr::Li{s, point, side});
}
inline Expr mpl_of(std::vector<int> weights, std::vector<Expr> args) {
  detail::check_mpl_shape(weights, args.size());
  return detail::make_expr(expr::Mpl{std::move(weights), std::move(args)});
}
inline Expr re_of(const Expr& e) { return detail::make_expr(expr::Re{e}); }
inline Expr im_of(const Expr& e) { return detail::make_expr(expr::Im{e}); }
inline Expr pow(const Expr& e, int n) { return detail::make_expr(expr::Power{e, n}); }
inline Expr scaled(const Rational& c, const Expr& e) { return detail::make_expr(expr::Scaled{c, e}); }

inline Expr operator+(const Expr& a, const Expr& b) {
  std::vector<Expr> terms;
  for (const Expr* x : {&a, &b}) {
    if (const auto* s = std::get_if<expr::Sum>(&x->node().v)) {
      terms.insert(terms.end(), s->terms.begin(), s->terms.end());
    } else {
      terms.push_back(*x);
    }
  }
  return detail::make_expr(expr::Sum{std::move(terms)});
}
inline Expr operator-(const Expr& a) {
  if (const auto* s = std::get_if<expr::Scaled>(&a.node().v)) return scaled(Rational(-s->coefficient), s->arg);
  if (const auto* l = std::get_if<expr::Lit>(&a.node().v)) return lit(Rational(-l->value));
  return scaled(-1, a);
}
inline Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }
inline Expr operator*(const Expr& a, const Expr& b) {
  std::vector<Expr> factors;
  for (const Expr* x : {&a, &b}) {
    if (const auto* p = std::get_if<expr::Product>(&x->node().v)) {
      factors.insert(factors.end(), p->factors.begin(), p->factors.end());
    } else {
      factors.push_back(*x);
    }
  }
  return detail::make_expr(expr::Product{std::move(factors)});
}
inline Expr operator*(const Rational& c, const Expr& e) { return scaled(c, e); }
inline Expr operator*(int c, const Expr& e) { return scaled(Rational(c), e); }
inline Expr operator/(const Expr& e, const Rational& c) {
  if (c == 0) fail(ErrorKind::pole, "division of an expression by zero");
  Rational inv = 1 / c;
  return scaled(inv, e);
}
inline Expr operator/(const Expr& e, int c) { return e / Rational(c); }
inline Expr operator/(const Expr& a, const Expr& b) { return a * pow(b, -1); }

// ---------------------------------------------------------------------------

namespace detail {

inline Complex eval_value(const Expr& e);

struct EvalVisitor {
  Complex operator()(const expr::Lit& x) const { return Complex(Real(x.value)); }
  Complex operator()(const expr::SqrtLit& x) const { return Complex(sqrt(Real(x.radicand))); }
  Complex operator()(const expr::Const& x) const { return Complex(named_value(x.name)); }
  Complex operator()(const expr::ImagUnit&) const { return imag_unit(); }
  Complex operator()(const expr::ExpIPi& x) const { return exp_i_pi(x.q); }
  Complex operator()(const expr::Log& x) const { return log(eval_value(x.arg)); }
  Complex operator()(const expr::Li& x) const { return li_value(x.s, eval_value(x.point), x.side); }
  Complex operator()(const expr::Mpl& x) const {
    std::vector<Complex> args;
    for (const auto& a : x.args) args.push_back(eval_value(a));
    return mpl_value(x.weights, args);
  }
  Complex operator()(const expr::Re& x) const { return Complex(eval_value(x.arg).re); }
  Complex operator()(const expr::Im& x) const { return Complex(eval_value(x.arg).im); }
  Complex operator()(const expr::Sum& x) const {
    Complex s;
    for (const auto& t : x.terms) s += eval_value(t);
    return s;
  }
  Complex operator()(const expr::Product& x) const {
    Complex p(1);
    for (const auto& f : x.factors) p = p * eval_value(f);
    return p;
  }
  Complex operator()(const expr::Power& x) const {
    Complex b = eval_value(x.base);
    if (x.exponent < 0 && b.is_zero()) fail(ErrorKind::pole, "negative power of zero");
    return pow(b, x.exponent);
  }
  Complex operator()(const expr::Scaled& x) const { return eval_value(x.arg) * Real(x.coefficient); }
};

inline Complex eval_value(const Expr& e) {
  Complex v = std::visit(EvalVisitor{}, e.node().v);
  require_finite(v, "expression");
  return v;
}

}  // namespace detail

/// Evaluates an expression at ctx.digits + guard and reports at ctx.digits.
inline ApComplex eval_expr(const Expr& e, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  return {detail::eval_value(e), ctx.digits};
}

inline Complex letter_value(const Expr& e) { return detail::eval_value(e); }

inline std::string to_string(const Expr& e);

namespace detail {

inline std::string rational_string(const Rational& r) { return r.get_str(); }

inline const char* side_suffix(CutSide s) {
  switch (s) {
    case CutSide::upper: return "+i0";
    case CutSide::lower: return "-i0";
    default: return "";
  }
}

struct PrintVisitor {
  std::string operator()(const expr::Lit& x) const { return rational_string(x.value); }
  std::string operator()(const expr::SqrtLit& x) const { return "sqrt(" + rational_string(x.radicand) + ")"; }
  std::string operator()(const expr::Const& x) const { return name_of(x.name); }
  std::string operator()(const expr::ImagUnit&) const { return "i"; }
  std::string operator()(const expr::ExpIPi& x) const { return "exp(i*pi*" + rational_string(x.q) + ")"; }
  std::string operator()(const expr::Log& x) const { return "log(" + to_string(x.arg) + ")"; }
  std::string operator()(const expr::Li& x) const {
    return "Li" + std::to_string(x.s) + "(" + to_string(x.point) + side_suffix(x.side) + ")";
  }
  std::string operator()(const expr::Mpl& x) const {
    std::string s = "Li[";
    for (std::size_t j = 0; j < x.weights.size(); ++j) s += (j ? "," : "") + std::to_string(x.weights[j]);
    s += "](";
    for (std::size_t j = 0; j < x.args.size(); ++j) s += (j ? ", " : "") + to_string(x.args[j]);
    return s + ")";
  }
  std::string operator()(const expr::Re& x) const { return "Re(" + to_string(x.arg) + ")"; }
  std::string operator()(const expr::Im& x) const { return "Im(" + to_string(x.arg) + ")"; }
  std::string operator()(const expr::Sum& x) const {
    std::string s = "(";
    for (std::size_t j = 0; j < x.terms.size(); ++j) s += (j ? " + " : "") + to_string(x.terms[j]);
    return s + ")";
  }
  std::string operator()(const expr::Product& x) const {
    std::string s;
    for (std::size_t j = 0; j < x.factors.size(); ++j) s += (j ? "*" : "") + to_string(x.factors[j]);
    return s;
  }
  std::string operator()(const expr::Power& x) const {
    return "(" + to_string(x.base) + ")^" + std::to_string(x.exponent);
  }
  std::string operator()(const expr::Scaled& x) const {
    return "[" + rational_string(x.coefficient) + "]*" + to_string(x.arg);
  }
};

}  // namespace detail

/// Canonical text form; stable across runs (used for the catalog hash).
inline std::string to_string(const Expr& e) { return std::visit(detail::PrintVisitor{}, e.node().v); }

namespace detail {

// Depth-first walk over Scaled coefficients outside Li/Mpl/Log arguments.
// `edit` may replace the coefficient at a given index.
struct CoefficientWalk {
  std::size_t index = 0;
  std::vector<Rational>* collect = nullptr;
  std::size_t target = static_cast<std::size_t>(-1);
  std::function<Rational(const Rational&)> edit;

  Expr walk(const Expr& e) {
    const auto& v = e.node().v;
    if (const auto* s = std::get_if<expr::Scaled>(&v)) {
      const std::size_t mine = index++;
      Rational c = s->coefficient;
      if (collect) collect->push_back(c);
      if (mine == target) c = edit(c);
      Expr inner = walk(s->arg);
      if (mine != target && inner.ptr() == s->arg.ptr()) return e;
      return scaled(c, inner);
    }
    if (const auto* s = std::get_if<expr::Sum>(&v)) return rebuild_list(e, s->terms, true);
    if (const auto* p = std::get_if<expr::Product>(&v)) return rebuild_list(e, p->factors, false);
    if (const auto* p = std::get_if<expr::Power>(&v)) {
      Expr b = walk(p->base);
      return b.ptr() == p->base.ptr() ? e : pow(b, p->exponent);
    }
    if (const auto* r = std::get_if<expr::Re>(&v)) {
      Expr a = walk(r->arg);
      return a.ptr() == r->arg.ptr() ? e : re_of(a);
    }
    if (const auto* r = std::get_if<expr::Im>(&v)) {
      Expr a = walk(r->arg);
      return a.ptr() == r->arg.ptr() ? e : im_of(a);
    }
    return e;
  }

  Expr rebuild_list(const Expr& e, const std::vector<Expr>& items, bool is_sum) {
    std::vector<Expr> out;
    bool changed = false;
    for (const auto& x : items) {
      out.push_back(walk(x));
      changed = changed || out.back().ptr() != x.ptr();
    }
    if (!changed) return e;
    if (is_sum) return detail::make_expr(expr::Sum{std::move(out)});
    return detail::make_expr(expr::Product{std::move(out)});
  }
};

}  // namespace detail

/// Rational multipliers of the tree in depth-first order, excluding those
/// inside polylogarithm and logarithm arguments.
inline std::vector<Rational> coefficients(const Expr& e) {
  std::vector<Rational> out;
  detail::CoefficientWalk w;
  w.collect = &out;
  w.walk(e);
  return out;
}

/// Copy of `e` with coefficient `index` (as enumerated by coefficients())
/// replaced by edit(old).
inline Expr with_coefficient(const Expr& e, std::size_t index, const std::function<Rational(const Rational&)>& edit) {
  detail::CoefficientWalk w;
  w.target = index;
  w.edit = edit;
  Expr out = w.walk(e);
  if (index >= w.index) fail(ErrorKind::domain, "coefficient index out of range");
  return out;
}

}  // namespace ibs

#endif  // IBS_CONSTANTS_HPP
