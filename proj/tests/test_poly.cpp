#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tsb/dense_poly.hpp"
#include "tsb/xy_poly.hpp"

using namespace tsb;
using tsb::oracle::lam;

namespace {

XPoly x_var() { return XPoly::var(); }

}  // namespace

TEST(DensePoly, ZeroIsEmpty) {
  EXPECT_TRUE(LambdaPoly::zero().is_zero());
  EXPECT_EQ(LambdaPoly::zero().degree(), -1);
  EXPECT_EQ(lam({0, 0, 0}), LambdaPoly::zero());
  EXPECT_EQ(lam({1, 2, 0}).degree(), 1);
}

TEST(DensePoly, ProductExpansion) {
  EXPECT_EQ(lam({1, -1}) * lam({1, -2}), lam({1, -3, 2}));
  const XPoly p = XPoly({lam({-1, 1}).scaled(Rational(1, 2)), LambdaPoly::one()});
  EXPECT_EQ(p * p, XPoly({lam({1, -2, 1}).scaled(Rational(1, 4)), lam({-1, 1}), LambdaPoly::one()}));
}

TEST(DensePoly, AdditiveIdentity) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const XPoly p = oracle::random_xpoly(rng);
    EXPECT_EQ(p + XPoly::zero(), p);
    EXPECT_EQ(p - p, XPoly::zero());
  }
}

TEST(DensePoly, RingAxiomsOnRandomPolys) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const XPoly a = oracle::random_xpoly(rng);
    const XPoly b = oracle::random_xpoly(rng);
    const XPoly c = oracle::random_xpoly(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
  }
}

TEST(DensePoly, EvaluationIsARingHomomorphism) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const XPoly a = oracle::random_xpoly(rng);
    const XPoly b = oracle::random_xpoly(rng);
    const Rational l0 = oracle::random_rational(rng);
    const Rational x0 = oracle::random_rational(rng);
    EXPECT_EQ(evaluate(a * b, l0, x0), evaluate(a, l0, x0) * evaluate(b, l0, x0));
    EXPECT_EQ(evaluate(a + b, l0, x0), evaluate(a, l0, x0) + evaluate(b, l0, x0));
    EXPECT_EQ(evaluate(a, l0, x0), substitute_lambda(a, l0)(x0));
    EXPECT_EQ(evaluate(a, l0, x0), substitute_x(a, x0)(l0));
  }
}

TEST(DensePoly, EvaluateListedValues) {
  const XPoly b1 = oracle::listed_polynomials()[1];
  EXPECT_EQ(evaluate(b1, Rational(1, 2), Rational(1, 3)), Rational(1, 12));
  const XPoly b2 = oracle::listed_polynomials()[2];
  EXPECT_EQ(evaluate(b2, Rational(0), Rational(1)), Rational(1, 6));
  const XPoly p = XPoly({lam({5, 3}), lam({7})});
  EXPECT_EQ(evaluate(p, Rational(0), Rational(0)), Rational(5));
}

TEST(DensePoly, DerivativeAndAntiderivative) {
  const QXPoly x2 = QXPoly::monomial(2, Rational(1));
  EXPECT_EQ(derivative(x2), QXPoly::monomial(1, Rational(2)));
  EXPECT_EQ(antiderivative(QXPoly::monomial(1, Rational(2))), x2);
  const auto listed = oracle::listed_polynomials();
  EXPECT_EQ(derivative(listed[1]), XPoly::one());
  EXPECT_EQ(derivative(listed[2]), XPoly({lam({-1, 1}), lam({2, -2})}));
  EXPECT_EQ(derivative(XPoly::one()), XPoly::zero());

  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const XPoly p = oracle::random_xpoly(rng);
    EXPECT_EQ(derivative(antiderivative(p)), p);
    // antiderivative(p') recovers p minus its constant term
    EXPECT_EQ(antiderivative(derivative(p)), p - XPoly(p.coeff(0)));
  }
}

TEST(DensePoly, SubstituteLambda) {
  const auto listed = oracle::listed_polynomials();
  EXPECT_EQ(substitute_lambda(listed[2], Rational(0)), QXPoly({Rational(1, 6), Rational(-1), Rational(1)}));
  EXPECT_EQ(substitute_lambda(listed[1], Rational(1)), QXPoly({Rational(0), Rational(1)}));
  EXPECT_TRUE(substitute_lambda(XPoly::zero(), Rational(3)).is_zero());
  EXPECT_EQ(embed(substitute_lambda(x_var(), Rational(2))), x_var());
}

TEST(DensePoly, ScaledRecursesIntoCoefficients) {
  const XPoly p = XPoly({lam({1, 2}), lam({3})});
  EXPECT_EQ(p.scaled(Rational(1, 2)), XPoly({lam({Rational(1, 2), 1}), lam({Rational(3, 2)})}));
  EXPECT_TRUE(p.scaled(Rational(0)).is_zero());
}

TEST(XYPoly, RingAndLift) {
  const XYPoly x = XYPoly::x();
  const XYPoly y = XYPoly::y();
  const XYPoly s = (x + y) * (x + y);
  EXPECT_EQ(s.coeff(1, 1), lam({2}));
  EXPECT_EQ(s.x_degree(), 2);
  EXPECT_EQ(s.y_degree(), 2);
  EXPECT_EQ(s - s, XYPoly::zero());
  EXPECT_EQ(XYPoly(x_var() * x_var()), x * x);
}

TEST(XYPoly, ShiftContractAndPartials) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const XPoly p = oracle::random_xpoly(rng);
    const XYPoly shifted = shift_x(p);
    EXPECT_EQ(at_y_zero(shifted), p);
    EXPECT_EQ(contract(shifted), p);
    EXPECT_EQ(partial_x(shifted), partial_y(shifted));
    EXPECT_EQ(at_y_zero(partial_x(shifted)), derivative(p));
    const Rational l0 = oracle::random_rational(rng);
    const Rational x0 = oracle::random_rational(rng);
    const Rational y0 = oracle::random_rational(rng);
    EXPECT_EQ(evaluate(shifted, l0, x0, y0), evaluate(p, l0, x0 + y0));
    EXPECT_EQ(evaluate(substitute_lambda(shifted, l0), Rational(0), x0, y0), evaluate(shifted, l0, x0, y0));
  }
}

TEST(XYPoly, ZeroCoefficientsAreNotStored) {
  XYPoly p = XYPoly::monomial(2, 1, lam({1}));
  p.add_term(2, 1, lam({-1}));
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.terms().empty());
}
