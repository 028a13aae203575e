#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace ibs;
using ibs_test::agree;
using ibs_test::alternating_sum;

namespace {

constexpr int kDigits = 50;

Real named(Named n) { return named_constant(n, PrecisionCtx(kDigits)).value.re; }

Real inv_pow(long n, int s) { return 1 / pow(Real(n), s); }

}  // namespace

TEST(Zeta, BruteForcePartialSumBracketsValue) {
  PrecisionScope scope(PrecisionCtx(30));
  constexpr long kTerms = 1000000;
  for (int s : {2, 3, 4}) {
    Real partial;
    for (long n = kTerms; n >= 1; --n) partial += inv_pow(n, s);
    // int_{N+1}^inf < tail < int_N^inf
    const Real lo = partial + 1 / (pow(Real(kTerms + 1), s - 1) * (s - 1));
    const Real hi = partial + 1 / (pow(Real(kTerms), s - 1) * (s - 1));
    const Real z = hurwitz_zeta(s, Rational(1), PrecisionCtx(30)).value.re;
    EXPECT_GE(z, lo) << "s = " << s;
    EXPECT_LE(z, hi) << "s = " << s;
  }
}

TEST(Zeta, EvenValuesMatchBernoulliClosedForms) {
  PrecisionScope scope{PrecisionCtx(kDigits)};
  const Real p = pi();
  EXPECT_GT(agree(Complex(zeta_value(2)), Complex(p * p / 6)), kDigits - 1);
  EXPECT_GT(agree(Complex(zeta_value(4)), Complex(pow(p, 4) / 90)), kDigits - 1);
  EXPECT_GT(agree(Complex(zeta_value(6)), Complex(pow(p, 6) / 945)), kDigits - 1);
}

TEST(Hurwitz, HalfShiftRelation) {
  // zeta(s, 1/2) = (2^s - 1) zeta(s)
  PrecisionScope scope{PrecisionCtx(kDigits)};
  for (int s : {2, 3, 5}) {
    const Real lhs = hurwitz_zeta(s, Rational(1, 2), PrecisionCtx(kDigits)).value.re;
    const Real rhs = (pow(Real(2), s) - 1) * zeta_value(s);
    EXPECT_GT(agree(Complex(lhs), Complex(rhs)), kDigits - 2) << "s = " << s;
  }
}

TEST(Hurwitz, RejectsBadArguments) {
  EXPECT_THROW(hurwitz_zeta(1, Rational(1), PrecisionCtx(30)), Error);
  EXPECT_THROW(hurwitz_zeta(2, Rational(0), PrecisionCtx(30)), Error);
}

// Each L-value as an alternating series whose terms form a moment sequence,
// summed by the convergence-accelerated alternating-sum oracle.
struct AlternatingCase {
  Named name;
  std::function<Real(long)> term;
};

TEST(LValues, AgreeWithAcceleratedAlternatingSums) {
  PrecisionScope scope{PrecisionCtx(kDigits)};
  const std::vector<AlternatingCase> cases = {
      {Named::catalan_G, [](long k) { return inv_pow(2 * k + 1, 2); }},
      {Named::beta4, [](long k) { return inv_pow(2 * k + 1, 4); }},
      {Named::L_8_2_3, [](long k) { return inv_pow(4 * k + 1, 3) - inv_pow(4 * k + 3, 3); }},
      {Named::L_8_4_4, [](long k) { return inv_pow(4 * k + 1, 4) + inv_pow(4 * k + 3, 4); }},
      {Named::L_12_4_3, [](long k) { return inv_pow(6 * k + 1, 3) - inv_pow(6 * k + 5, 3); }},
  };
  for (const auto& c : cases) {
    const Real oracle = alternating_sum(c.term, 90);
    EXPECT_GT(agree(Complex(named(c.name)), Complex(oracle)), kDigits - 5) << name_of(c.name);
  }
}

TEST(LValues, L32AgreesWithAlternatingSumAndIntegral) {
  PrecisionScope scope{PrecisionCtx(kDigits)};
  // 1 - 1/2^4 + 1/4^4 - 1/5^4 + ..., paired into blocks of two terms, is a
  // positive series; the Mellin form of the same sum is
  //   (1/6) int_0^1 log^3(1/u) / (1 + u + u^2) du.
  auto f = [](const Complex& u) {
    const Complex l = -log(u);
    return l * l * l / (Complex(1) + u + u * u);
  };
  const Real tol = pow(Real(10), -kDigits);
  const Complex integral = detail::tanh_sinh(f, Complex(0), Complex(1), tol, kDigits).value.value;
  const Complex oracle = integral / 6L;
  EXPECT_GT(agree(Complex(named(Named::L_3_2_4)), oracle), kDigits - 5);

  // Crude check on the sign pattern from the first 2000 blocks (tail < 1e-13).
  Real partial;
  for (long m = 0; m < 2000; ++m) partial += inv_pow(3 * m + 1, 4) - inv_pow(3 * m + 2, 4);
  EXPECT_GT(agree(Complex(named(Named::L_3_2_4)), Complex(partial)), 12);
}

TEST(NamedConstants, CatalanLikeTrilogMatchesDirectSeries) {
  PrecisionScope scope{PrecisionCtx(kDigits)};
  // Im sum ((1+i)/2)^n / n^3; |ratio| = 1/sqrt 2.
  const Complex x(Real(1) / 2, Real(1) / 2);
  Complex p = x;
  Complex s;
  for (long n = 1; n <= 400; ++n) {
    s += p / pow(Real(n), 3);
    p = p * x;
  }
  EXPECT_GT(agree(Complex(named(Named::mathcal_G)), Complex(s.im)), kDigits - 5);
}

TEST(NamedConstants, LogarithmsInvertTheirArguments) {
  PrecisionScope scope{PrecisionCtx(kDigits)};
  const Real r5 = sqrt(Real(5));
  const std::vector<std::pair<Named, Real>> cases = {
      {Named::lam, Real(2)},
      {Named::Lam, Real(3)},
      {Named::pound, (1 + r5) / 2},
      {Named::scriptL, Real(5)},
      {Named::lam_tilde, 1 + sqrt(Real(2))},
      {Named::Lam_tilde, 2 + sqrt(Real(3))},
  };
  for (const auto& [n, arg] : cases) {
    EXPECT_GT(agree(Complex(exp(named(n))), Complex(arg)), kDigits - 5) << name_of(n);
  }
  const Real phi = named(Named::phi);
  EXPECT_GT(agree(Complex(phi * phi), Complex(phi + 1)), kDigits - 2);
}

TEST(NamedConstants, NamesRoundTrip) {
  for (Named n : kAllNamed) {
    const auto back = named_from_string(name_of(n));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, n);
  }
  EXPECT_FALSE(named_from_string("no_such_constant").has_value());
}

TEST(NamedConstants, BetaFourTextValue) {
  // Leading digits of beta(4), cross-checked against the alternating sum above.
  PrecisionScope scope(PrecisionCtx(30));
  EXPECT_EQ(to_string(named_constant(Named::beta4, PrecisionCtx(30)).value, 18), "0.988944551741105336");
}

// ---------------------------------------------------------------------------
// Expression trees

namespace {

Expr random_leaf(ibs_test::Rng& rng) {
  switch (rng.integer(0, 4)) {
    case 0: return lit(rng.rational(-3, 3, 7));
    case 1: return constant(kAllNamed[static_cast<std::size_t>(rng.integer(0, 15))]);
    case 2: return imag();
    case 3: return sqrt_of(Rational(rng.integer(2, 11)));
    default: return li_of(static_cast<int>(rng.integer(2, 4)), lit(rng.rational(-0.9, 0.9, 11)));
  }
}

Expr random_tree(ibs_test::Rng& rng, int depth) {
  if (depth == 0) return random_leaf(rng);
  Expr a = random_tree(rng, depth - 1);
  Expr b = random_tree(rng, depth - 1);
  return rng.integer(0, 1) ? a + b : a * b;
}

}  // namespace

TEST(Expr, EvaluationIsAHomomorphism) {
  PrecisionScope scope(PrecisionCtx(40));
  const PrecisionCtx ctx(40);
  ibs_test::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Expr a = random_tree(rng, 2);
    const Expr b = random_tree(rng, 2);
    const Complex va = eval_expr(a, ctx).value;
    const Complex vb = eval_expr(b, ctx).value;
    EXPECT_GT(agree(eval_expr(a + b, ctx).value, va + vb), 35) << to_string(a) << " | " << to_string(b);
    EXPECT_GT(agree(eval_expr(a * b, ctx).value, va * vb), 35) << to_string(a) << " | " << to_string(b);
  }
}

TEST(Expr, OperatorsAndPrinting) {
  const PrecisionCtx ctx(30);
  PrecisionScope scope(ctx);
  const Expr e = q(1, 2) * constant(Named::pi) - lit(3) + pow(sqrt_of(2), 2);
  const Complex v = eval_expr(e, ctx).value;
  EXPECT_GT(agree(v, Complex(pi() / 2 - 1)), 28);
  EXPECT_FALSE(to_string(e).empty());
  EXPECT_GT(agree(eval_expr(exp_i_pi_of(q(1, 2)), ctx).value, imag_unit()), 28);
  EXPECT_GT(agree(eval_expr(re_of(li_of(2, lit(3), CutSide::upper)), ctx).value,
                  eval_expr(re_of(li_of(2, lit(3), CutSide::lower)), ctx).value),
            28);
}

TEST(Expr, CoefficientEditingTouchesOnlyTheChosenTerm) {
  const Expr e = q(3, 4) * constant(Named::zeta3) + q(-2, 5) * li_of(2, lit(q(1, 3))) + 7 * constant(Named::lam);
  const auto cs = coefficients(e);
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[0], Rational(3, 4));
  EXPECT_EQ(cs[1], Rational(-2, 5));
  EXPECT_EQ(cs[2], Rational(7));
  const Expr f = with_coefficient(e, 1, [](const Rational& c) { return Rational(c + 1); });
  const auto fs = coefficients(f);
  EXPECT_EQ(fs[0], cs[0]);
  EXPECT_EQ(fs[1], Rational(3, 5));
  EXPECT_EQ(fs[2], cs[2]);
  EXPECT_THROW(with_coefficient(e, 3, [](const Rational& c) { return c; }), Error);
}
