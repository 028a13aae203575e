#include "test_support.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace ibs;
using ibs_test::agree;

TEST(Precision, ScopeSetsAndRestoresWorkingBits) {
  const auto before = working_bits();
  {
    PrecisionScope scope(PrecisionCtx(60));
    EXPECT_EQ(working_bits(), bits_for_digits(70));
  }
  EXPECT_EQ(working_bits(), before);
}

TEST(Precision, RejectsTooFewDigits) {
  EXPECT_THROW(PrecisionCtx(5), Error);
  EXPECT_THROW(PrecisionCtx(40, -1), Error);
}

TEST(Precision, IsThreadLocal) {
  PrecisionScope scope(PrecisionCtx(100));
  mpfr_prec_t other = 0;
  std::thread t([&] {
    PrecisionScope inner(PrecisionCtx(20));
    other = working_bits();
  });
  t.join();
  EXPECT_EQ(other, bits_for_digits(30));
  EXPECT_EQ(working_bits(), bits_for_digits(110));
}

TEST(Real, PiToFortyDigits) {
  PrecisionScope scope(PrecisionCtx(40));
  EXPECT_EQ(to_string(pi(), 40), "3.141592653589793238462643383279502884197");
}

TEST(Real, ParseRationalForms) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("-2.5e-1"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("17"), Rational(17));
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Complex, PrincipalLogAndSqrt) {
  PrecisionScope scope(PrecisionCtx(40));
  const Complex m1(-1);
  EXPECT_GT(agree(log(m1), Complex(Real(0), pi())), 39);
  EXPECT_GT(agree(sqrt(m1), imag_unit()), 39);
  const Complex z(Real(3), Real(-4));
  EXPECT_GT(agree(exp(log(z)), z), 38);
  EXPECT_GT(agree(sqrt(z) * sqrt(z), z), 38);
}

TEST(Complex, ExpIPiOfRational) {
  PrecisionScope scope(PrecisionCtx(40));
  const Complex w = exp_i_pi(Rational(1, 4));
  const Real h = sqrt(Real(2)) / 2;
  EXPECT_GT(agree(w, Complex(h, h)), 39);
  EXPECT_GT(agree(exp_i_pi(Rational(1)), Complex(-1)), 39);
}

TEST(Complex, AgreementDigitsUsesRelativeScaleAboveOne) {
  PrecisionScope scope(PrecisionCtx(40));
  EXPECT_NEAR(agreement_digits(Complex(Real(1001)), Complex(Real(1000)), 100), 3.0, 1e-9);
  EXPECT_NEAR(agreement_digits(Complex(Real(0.001)), Complex(Real(0)), 100), 3.0, 1e-9);
  EXPECT_EQ(agreement_digits(Complex(2), Complex(2), 40), 40);
}

TEST(Bernoulli, KnownValues) {
  EXPECT_EQ(bernoulli(0), Rational(1));
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(3), Rational(0));
  EXPECT_EQ(bernoulli(4), Rational(-1, 30));
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
  EXPECT_EQ(bernoulli(20), Rational(-174611, 330));
}

TEST(Bernoulli, SatisfiesDefiningRecurrence) {
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
  for (int m = 1; m <= 40; ++m) {
    Rational s(0);
    mpz_class c = 1;
    for (int j = 0; j <= m; ++j) {
      s += Rational(c) * bernoulli(static_cast<std::size_t>(j));
      c = c * (m + 1 - j) / (j + 1);
    }
    EXPECT_EQ(s, Rational(0)) << "m = " << m;
  }
}

Complex point(const char* s) { return eval_expr(parse_point(s), PrecisionCtx(30)).value; }

TEST(Parse, PointGrammar) {
  PrecisionScope scope(PrecisionCtx(30));
  EXPECT_GT(agree(point("3/4"), Complex(Rational(3, 4))), 29);
  EXPECT_GT(agree(point("-0.5"), Complex(Rational(-1, 2))), 29);
  EXPECT_GT(agree(point("i"), imag_unit()), 29);
  EXPECT_GT(agree(point("-i"), -imag_unit()), 29);
  EXPECT_GT(agree(point("2i"), Complex(Real(0), Real(2))), 29);
  EXPECT_GT(agree(point("1/2+1/3i"), Complex(Real(Rational(1, 2)), Real(Rational(1, 3)))), 29);
  EXPECT_GT(agree(point("0.25-1.5i"), Complex(Real(0.25), Real(-1.5))), 29);
  EXPECT_GT(agree(point("1-i"), Complex(Real(1), Real(-1))), 29);
  EXPECT_GT(agree(point("1e-1+2e+0i"), Complex(Real(Rational(1, 10)), Real(2))), 29);
  EXPECT_GT(agree(point("exp(i*pi*1/3)"), exp_i_pi(Rational(1, 3))), 29);
  EXPECT_GT(agree(point("exp(-i*pi*1/2)"), -imag_unit()), 29);
}

TEST(Parse, DecimalsAreExact) {
  // 0.1 is exactly 1/10, not the nearest double.
  PrecisionScope scope(PrecisionCtx(60));
  const Complex v = eval_expr(parse_point("0.1"), PrecisionCtx(60)).value;
  EXPECT_GT(agree(v * 10L, Complex(1)), 59);
}

TEST(Parse, RejectsMalformedInput) {
  for (const char* bad : {"", "1+", "exp(pi)", "exp(i*pi*1/3", "x", "1/0", "3//4"}) {
    EXPECT_THROW(parse_point(bad), Error) << bad;
  }
  EXPECT_THROW(parse_integer("3.5"), Error);
  EXPECT_EQ(parse_integer("-7"), -7);
}

TEST(Parse, PointListKeepsExpArgumentsWhole) {
  const auto pts = parse_point_list("0,exp(i*pi*1/4),-1");
  ASSERT_EQ(pts.size(), 3u);
}
