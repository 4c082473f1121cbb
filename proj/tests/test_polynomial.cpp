#include <cmath>

#include <gtest/gtest.h>

#include "qcurl/polynomial.hpp"

using namespace qcurl;

namespace {

const AxisBox kUnit{{-0.5, -0.5, -0.5}, {0.5, 0.5, 0.5}};

Polynomial sample() {
  Polynomial p;
  p.add_term({2, 0, 0}, 3.0);
  p.add_term({0, 1, 1}, -2.0);
  p.add_term({1, 3, 0}, 0.5);
  p.add_term({0, 0, 0}, 1.25);
  return p;
}

}  // namespace

TEST(Polynomial, EvaluatesTerms) {
  const Vec3 x{0.3, -0.7, 1.1};
  const double expect = 3 * 0.09 - 2 * (-0.7) * 1.1 + 0.5 * 0.3 * std::pow(-0.7, 3) + 1.25;
  EXPECT_NEAR(sample().evaluate(x), expect, 1e-14);
}

TEST(Polynomial, DerivativeMatchesHand) {
  const Polynomial dx = sample().derivative(0);
  const Vec3 x{0.3, -0.7, 1.1};
  EXPECT_NEAR(dx.evaluate(x), 6 * 0.3 + 0.5 * std::pow(-0.7, 3), 1e-14);
  EXPECT_NEAR(sample().derivative({1, 1, 0}).evaluate(x), 1.5 * 0.49, 1e-14);
}

TEST(Polynomial, IntegratesMonomials) {
  // int_{-1/2}^{1/2} t^2 = 1/12, odd powers vanish.
  EXPECT_NEAR(Polynomial::monomial({2, 0, 0}).integrate(kUnit), 1.0 / 12.0, 1e-15);
  EXPECT_NEAR(Polynomial::monomial({2, 2, 4}).integrate(kUnit), 1.0 / 144.0 / 80.0, 1e-16);
  EXPECT_NEAR(Polynomial::monomial({1, 2, 0}).integrate(kUnit), 0.0, 1e-16);
  const AxisBox face{{0.5, -0.5, -0.5}, {0.5, 0.5, 0.5}};
  EXPECT_NEAR(Polynomial::monomial({3, 2, 0}).integrate(face), 0.125 / 12.0, 1e-16);
  const AxisBox box{{0.0, 1.0, 2.0}, {1.0, 3.0, 2.5}};
  EXPECT_NEAR(Polynomial::monomial({1, 1, 1}).integrate(box), 0.5 * 4.0 * (2.5 * 2.5 - 4.0) / 2.0, 1e-13);
}

TEST(Polynomial, ProductEvaluatesAsProduct) {
  const Polynomial a = sample();
  const Polynomial b = Polynomial::coordinate(2) + Polynomial::constant(2.0);
  const Vec3 x{-0.2, 0.4, 0.9};
  EXPECT_NEAR((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x), 1e-13);
}

TEST(Polynomial, MixedMonomialDetection) {
  EXPECT_TRUE(sample().has_mixed_monomials());
  Polynomial p;
  p.add_term({3, 0, 0}, 1.0);
  p.add_term({0, 2, 0}, 1.0);
  EXPECT_FALSE(p.has_mixed_monomials());
}

TEST(PolyField, CurlOfGradientVanishes) {
  const PolyField g = PolyField::gradient(sample() * sample());
  EXPECT_LT(g.curl().max_abs_coefficient(), 1e-13);
}

TEST(PolyField, DivergenceOfCurlVanishes) {
  const PolyField v(sample(), sample() * Polynomial::coordinate(0), Polynomial::monomial({1, 2, 3}));
  EXPECT_LT(v.curl().divergence().max_abs_coefficient(), 1e-13);
}

TEST(PolyField, CrossFromLeft) {
  const PolyField w(Polynomial::constant(1.0), Polynomial::coordinate(0), Polynomial::constant(0.0));
  const Vec3 c{0.1, 0.2, 0.3};
  const Vec3 x{0.7, -0.4, 0.5};
  const Vec3 r = x - c;
  const Vec3 wx = w.evaluate(x);
  const Vec3 expect{r[1] * wx[2] - r[2] * wx[1], r[2] * wx[0] - r[0] * wx[2], r[0] * wx[1] - r[1] * wx[0]};
  const Vec3 got = w.cross_from_left(c).evaluate(x);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(got[i], expect[i], 1e-14);
}

TEST(PolyField, GradDotIntegral) {
  // grad(x^2 e1) : grad(x y e1) = 2x * y -> integral 0; with itself 4x^2 -> 1/3.
  const PolyField a = PolyField::along(0, Polynomial::monomial({2, 0, 0}));
  const PolyField b = PolyField::along(0, Polynomial::monomial({1, 1, 0}));
  EXPECT_NEAR(integrate_grad_dot(a, b, kUnit), 0.0, 1e-16);
  EXPECT_NEAR(integrate_grad_dot(a, a, kUnit), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(integrate_dot(a, a, kUnit), 1.0 / 80.0, 1e-16);
}
