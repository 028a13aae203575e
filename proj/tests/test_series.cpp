#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace ibs;
using ibs_test::agree;

namespace {

constexpr int kDigits = 40;
const PrecisionCtx kCtx(kDigits);

Complex s_at(int k, const Complex& z, const PrecisionCtx& ctx = kCtx) { return s_series(k, z, ctx).value; }

// Exact partial sum of z^n / ((2n+1)^k C(2n,n)) over n < terms.
Rational exact_partial(int k, const Rational& z, int terms) {
  Rational sum(0);
  Rational zn(1);
  for (int n = 0; n < terms; ++n) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
    mpz_class odd;
    mpz_ui_pow_ui(odd.get_mpz_t(), 2 * n + 1, k);
    sum += zn / Rational(c * odd);
    zn *= z;
  }
  return sum;
}

// f_k(x) = x S_k(x^2)
Real f(int k, const Real& x, const PrecisionCtx& ctx) { return x * s_at(k, Complex(x * x), ctx).re; }

}  // namespace

TEST(Series, ZeroArgumentGivesOne) {
  for (int k : {0, 1, 3, 6}) EXPECT_EQ(to_string(s_at(k, Complex(0)), 10), "1");
}

TEST(Series, MatchesExactRationalPartialSums) {
  PrecisionScope scope(kCtx);
  for (const Rational& z : {Rational(1), Rational(-1), Rational(1, 3), Rational(-7, 8)}) {
    for (int k : {0, 1, 2, 3, 4}) {
      // ratio <= 1/4 after the first terms; 80 terms leave < 1e-46
      const Complex oracle(Real(exact_partial(k, z, 80)));
      EXPECT_GT(agree(s_at(k, Complex(z)), oracle), kDigits - 1) << "k = " << k;
    }
  }
}

TEST(Series, ClassicalClosedFormsForKZeroAndOne) {
  PrecisionScope scope(kCtx);
  for (const Rational& z : {Rational(1), Rational(2), Rational(-1), Rational(-9, 4)}) {
    EXPECT_GT(agree(s_at(1, Complex(z)), s1_closed(Complex(z), kCtx).value), kDigits - 5);
    EXPECT_GT(agree(s_at(0, Complex(z)), s0_closed(Complex(z), kCtx).value), kDigits - 5);
  }
  // S_1(1) = 2 pi / (3 sqrt 3)
  EXPECT_GT(agree(s1_closed(Complex(1), kCtx).value, Complex(2 * pi() / (3 * sqrt(Real(3))))), kDigits - 2);
  const Complex zc(Real(1), Real(2));
  EXPECT_GT(agree(s_at(1, zc), s1_closed(zc, kCtx).value), kDigits - 5);
}

TEST(Series, ClosedFormsRejectTheBranchRay) {
  EXPECT_THROW(s1_closed(Complex(4), kCtx), Error);
  EXPECT_THROW(s0_closed(Complex(5), kCtx), Error);
}

TEST(Series, DivergentAndUnsupportedArguments) {
  EXPECT_THROW(s_series(3, Complex(5), kCtx), Error);
  EXPECT_THROW(s_series(3, Complex(Real(3), Real(3)), kCtx), Error);
  EXPECT_THROW(s_series(1, Complex(4), kCtx), Error);
  EXPECT_THROW(s_series(-1, Complex(1), kCtx), Error);
}

TEST(Series, BetaIntegralRouteMatchesDirectSumAtTheSwitchRadius) {
  PrecisionScope scope(kCtx);
  for (const Complex& z : {Complex(Real(3.5)), Complex(Real(-3.5)), Complex(Real(2.1), Real(2.8))}) {
    for (int k : {2, 3, 4}) {
      const Complex y = sqrt(z);
      const Complex via_integral = detail::beta_integral_value(k, y, kDigits) / y;
      EXPECT_GT(agree(detail::s_direct(k, z), via_integral), kDigits - 5) << "k = " << k;
    }
  }
}

TEST(Series, DerivativeLadderCentralDifference) {
  // x f_k'(x) = f_{k-1}(x), step 1e-8 at 30 digits.
  const PrecisionCtx ctx(30);
  PrecisionScope scope(ctx);
  const Real h = pow(Real(10), -8);
  for (int k : {1, 2, 3}) {
    for (const Real& x : {Real(Rational(3, 10)), Real(Rational(9, 10)), Real(Rational(3, 2))}) {
      const Real deriv = (f(k, x + h, ctx) - f(k, x - h, ctx)) / (2 * h);
      const Real lhs = x * deriv;
      const Real rhs = f(k - 1, x, ctx);
      EXPECT_LE(abs((lhs - rhs) / rhs), Real(1e-10)) << "k = " << k;
    }
  }
}

TEST(Series, DerivativeLadderFivePointStencil) {
  const PrecisionCtx ctx(60);
  PrecisionScope scope(ctx);
  const Real h = pow(Real(10), -6);
  for (int k : {1, 2, 3}) {
    for (const Real& x : {Real(Rational(3, 10)), Real(Rational(9, 10)), Real(Rational(3, 2))}) {
      const Real deriv =
          (f(k, x - 2 * h, ctx) - 8 * f(k, x - h, ctx) + 8 * f(k, x + h, ctx) - f(k, x + 2 * h, ctx)) / (12 * h);
      const Real lhs = x * deriv;
      const Real rhs = f(k - 1, x, ctx);
      EXPECT_LE(abs((lhs - rhs) / rhs), pow(Real(10), -20)) << "k = " << k;
    }
  }
}

TEST(Series, ChudnovskySumMatchesExactPartialSums) {
  PrecisionScope scope(kCtx);
  Rational sum(0);
  for (int n = 1; n <= 60; ++n) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 3 * n, n);
    mpz_class den = c * n * n * n;
    den <<= n;
    sum += Rational(1) / Rational(den);
  }
  EXPECT_GT(agree(chudnovsky_sum(kCtx).value, Complex(Real(sum))), kDigits - 1);
}

// ---------------------------------------------------------------------------

TEST(ChenFamily, AdmissibleRegion) {
  PrecisionScope scope(kCtx);
  EXPECT_TRUE(ChenFamilyParam::admissible(Complex(Real(0.5))));
  EXPECT_TRUE(ChenFamilyParam::admissible(Complex(sqrt(Real(2)) - 1)));
  EXPECT_TRUE(ChenFamilyParam::admissible(exp_i_pi(Rational(1, 4))));
  EXPECT_FALSE(ChenFamilyParam::admissible(Complex(Real(0.3))));
  EXPECT_FALSE(ChenFamilyParam::admissible(Complex(Real(-0.5))));
  EXPECT_FALSE(ChenFamilyParam::admissible(Complex(Real(0.5), Real(-0.1))));
  EXPECT_FALSE(ChenFamilyParam::admissible(Complex(Real(1.2))));
  EXPECT_THROW(ChenFamilyParam::checked(Complex(Real(0.1))), Error);
}

TEST(ChenFamily, SeededSamplesCoverTheRequiredShapes) {
  const auto ws = chen_family_samples(kChenFamilySeed, 20);
  ASSERT_EQ(ws.size(), 20u);
  PrecisionScope scope(kCtx);
  int real = 0;
  int unimodular = 0;
  for (const auto& w : ws) {
    EXPECT_TRUE(ChenFamilyParam::admissible(letter_value(w)));
    if (w.im == 0) ++real;
    if (w.re * w.re + w.im * w.im == 1) ++unimodular;
  }
  EXPECT_EQ(real, 3);
  EXPECT_EQ(unimodular, 3);
  // Same seed, same samples.
  const auto again = chen_family_samples(kChenFamilySeed, 20);
  for (std::size_t j = 0; j < ws.size(); ++j) EXPECT_TRUE(ws[j] == again[j]);
}

TEST(ChenFamily, IdentityHoldsOnSeededSamples) {
  PrecisionScope scope(kCtx);
  for (const auto& w : chen_family_samples(kChenFamilySeed, 20)) {
    const ChenFamilyParam p = ChenFamilyParam::checked(letter_value(w));
    EXPECT_GT(agree(chen_family_lhs(p, kCtx).value, chen_family_rhs(p, kCtx).value), kDigits - 10);
  }
}

TEST(ChenFamily, SpecialParameters) {
  PrecisionScope scope(kCtx);
  // w = e^{i pi/6}: x = -i, so x S_3(-x^2) = -i S_3(1).
  const ChenFamilyParam p{exp_i_pi(Rational(1, 6))};
  EXPECT_GT(agree(chen_family_rhs(p, kCtx).value, -imag_unit() * s_at(3, Complex(1))), kDigits - 5);
  // w = 1: x = 0.
  EXPECT_GT(agree(chen_family_lhs(ChenFamilyParam{Complex(1)}, kCtx).value, Complex()), kDigits);
  EXPECT_GT(agree(chen_family_rhs(ChenFamilyParam{Complex(1)}, kCtx).value, Complex()), kDigits - 5);
}

TEST(K2Form, HypergeometricFormMatchesDilogClosedForm) {
  PrecisionScope scope(kCtx);
  for (const Rational& w : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    EXPECT_GT(agree(k2_hypergeometric_form(Complex(w), kCtx).value, k2_closed_form(Complex(w), kCtx).value),
              kDigits - 10);
  }
}

TEST(K2Form, SmallXUsesTheDirectSum) {
  // w = 3/4: x = 7/12, so the form is x S_2(-x^2).
  PrecisionScope scope(kCtx);
  const Complex x(Rational(7, 12));
  EXPECT_GT(agree(k2_hypergeometric_form(Complex(Rational(3, 4)), kCtx).value, x * s_at(2, -(x * x))), kDigits - 1);
}
