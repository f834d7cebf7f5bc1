#include "suregrover/exact_poly.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

namespace suregrover::exact {
namespace {

TEST(RationalPoly, NormalizesTrailingZeros) {
  const RationalPoly p({mpq_class(1), mpq_class(0), mpq_class(0)});
  EXPECT_EQ(p.degree(), 0);
  EXPECT_TRUE(RationalPoly({mpq_class(0)}).is_zero());
  EXPECT_EQ(RationalPoly().degree(), -1);
}

TEST(RationalPoly, ScaledProductExpands) {
  // 3 x (1 - x)^2 = 3x - 6x^2 + 3x^3
  const RationalPoly p = RationalPoly::scaled_product(3, 1, 2);
  EXPECT_EQ(p, RationalPoly({mpq_class(0), mpq_class(3), mpq_class(-6), mpq_class(3)}));
  EXPECT_EQ(p.to_string(), "3*f - 6*f^2 + 3*f^3");
}

TEST(RationalPoly, ArithmeticAgreesWithEvaluation) {
  const RationalPoly a({mpq_class(1, 3), mpq_class(-2), mpq_class(5, 7)});
  const RationalPoly b({mpq_class(-4), mpq_class(0), mpq_class(0), mpq_class(1, 2)});
  for (const mpq_class& x : {mpq_class(0), mpq_class(1, 5), mpq_class(-3, 2), mpq_class(7)}) {
    EXPECT_EQ((a + b).evaluate_exact(x), a.evaluate_exact(x) + b.evaluate_exact(x));
    EXPECT_EQ((a - b).evaluate_exact(x), a.evaluate_exact(x) - b.evaluate_exact(x));
    EXPECT_EQ((a * b).evaluate_exact(x), a.evaluate_exact(x) * b.evaluate_exact(x));
  }
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ((a * b).degree(), 5);
}

TEST(RationalPoly, EvaluateRoundsOnce) {
  // (1 - x)^12 near x = 1 cancels badly in naive double Horner form.
  const RationalPoly p = RationalPoly::scaled_product(1, 0, 12);
  const double x = 0.999;
  EXPECT_DOUBLE_EQ(p.evaluate(x), std::pow(1.0 - x, 12));
}

TEST(RationalPoly, ToStringShapes) {
  EXPECT_EQ(RationalPoly().to_string(), "0");
  EXPECT_EQ(RationalPoly({mpq_class(-1), mpq_class(1)}).to_string("x"), "-1 + x");
  EXPECT_EQ(RationalPoly::monomial(mpq_class(-1, 2), 3).to_string(), "-1/2*f^3");
}

TEST(TrigPoly, PythagoreanIdentityIsExact) {
  const TrigPoly c = TrigPoly::cos_theta(), s = TrigPoly::sin_theta();
  const TrigPoly one = c * c + s * s;
  const TrigPoly diff = one - TrigPoly::constant(1);
  EXPECT_TRUE(diff.even().is_zero());
  EXPECT_TRUE(diff.odd().is_zero());
}

TEST(TrigPoly, ExponentialsMultiply) {
  const TrigPoly prod = TrigPoly::exp_i_theta(3) * TrigPoly::exp_i_theta(-3);
  const TrigPoly diff = prod - TrigPoly::constant(1);
  EXPECT_TRUE(diff.even().is_zero());
  EXPECT_TRUE(diff.odd().is_zero());
  const TrigPoly conj_diff = TrigPoly::exp_i_theta(2).conj() - TrigPoly::exp_i_theta(-2);
  EXPECT_TRUE(conj_diff.even().is_zero());
  EXPECT_TRUE(conj_diff.odd().is_zero());
}

TEST(TrigPoly, EvaluateMatchesComplexArithmetic) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0), angle(-3.0, 3.0);
  const TrigPoly expr = TrigPoly::constant(2) * TrigPoly::cos_theta() * TrigPoly::exp_i_theta(-1) *
                        (TrigPoly::constant(1) - TrigPoly::fraction() -
                         TrigPoly::fraction() * TrigPoly::exp_i_theta(2));
  for (int i = 0; i < 100; ++i) {
    const double f = unit(rng), t = angle(rng);
    const std::complex<double> ref =
        2.0 * std::cos(t) * std::polar(1.0, -t) * (1.0 - f - f * std::polar(1.0, 2 * t));
    const auto [re, im] = expr.evaluate(f, t);
    ASSERT_NEAR(re, ref.real(), 1e-13);
    ASSERT_NEAR(im, ref.imag(), 1e-13);
  }
}

}  // namespace
}  // namespace suregrover::exact
