#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tsb/bernoulli.hpp"
#include "tsb/bivariate.hpp"
#include "tsb/serialize.hpp"

using namespace tsb;
using nlohmann::json;
using tsb::oracle::lam;

TEST(Serialize, EncodingShape) {
  EXPECT_EQ(to_json(Rational(-1, 2)), json("-1/2"));
  EXPECT_EQ(to_json(LambdaPoly::zero()), json::array());
  EXPECT_EQ(to_json(lam({Rational(-1, 2), Rational(1, 2)})), json({"-1/2", "1/2"}));
  const json p = to_json(oracle::listed_polynomials()[1]);
  EXPECT_EQ(p["var"], "x");
  EXPECT_EQ(p["coeffs"], json::parse(R"([["-1/2","1/2"],["1"]])"));
  const json xy = to_json(XYPoly::monomial(1, 2, lam({3})));
  EXPECT_EQ(xy, json::parse(R"([{"coeff":["3"],"xexp":1,"yexp":2}])"));
}

TEST(Serialize, RoundTripRandom) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const XPoly p = oracle::random_xpoly(rng);
    EXPECT_EQ(xpoly_from_json(json::parse(to_json(p).dump())), p);
    const LambdaPoly c = oracle::random_lambda_poly(rng);
    EXPECT_EQ(lambda_poly_from_json(to_json(c)), c);
    const XYPoly q = shift_x(p) * XYPoly(oracle::random_xpoly(rng, 1));
    EXPECT_EQ(xypoly_from_json(json::parse(to_json(q).dump())), q);
  }
}

TEST(Serialize, RoundTripFamilies) {
  for (const auto& p : beta_tilde_recurrence_family(10)) EXPECT_EQ(xpoly_from_json(to_json(p)), p);
  for (const auto& p : beta_r_family(6, 2, BivariateRoute::Recurrence).polys) {
    EXPECT_EQ(xypoly_from_json(to_json(p)), p);
  }
}

TEST(Serialize, RejectsMalformed) {
  EXPECT_THROW(rational_from_json(json(3)), std::invalid_argument);
  EXPECT_THROW(rational_from_json(json("1/0")), std::domain_error);
  EXPECT_THROW(lambda_poly_from_json(json("1")), std::invalid_argument);
  EXPECT_THROW(xpoly_from_json(json::parse(R"({"var":"y","coeffs":[]})")), std::invalid_argument);
  EXPECT_THROW(xpoly_from_json(json::array()), std::invalid_argument);
  EXPECT_THROW(xypoly_from_json(json::parse(R"([{"xexp":-1,"yexp":0,"coeff":["1"]}])")), std::invalid_argument);
  EXPECT_THROW(xypoly_from_json(json::parse(R"([{"xexp":1}])")), std::invalid_argument);
}

TEST(Render, Text) {
  const auto listed = oracle::listed_polynomials();
  EXPECT_EQ(to_text(embed(substitute_lambda(listed[2], Rational(0)))), "x^2 - x + 1/6");
  EXPECT_EQ(to_text(XPoly::zero()), "0");
  EXPECT_EQ(to_text(lam({1, -3, 2})), "2*lambda^2 - 3*lambda + 1");
  EXPECT_EQ(to_text(listed[2]), "(-lambda + 1)*x^2 + (lambda - 1)*x - 1/6*lambda^2 + 1/6");
  EXPECT_EQ(to_text(listed[1]), "x + 1/2*lambda - 1/2");
}

TEST(Render, Latex) {
  EXPECT_EQ(to_latex(Rational(-1, 2)), "-\\frac{1}{2}");
  EXPECT_EQ(to_latex(Rational(3)), "3");
  const auto listed = oracle::listed_polynomials();
  EXPECT_EQ(to_latex(embed(substitute_lambda(listed[2], Rational(0)))), "x^{2} - x + \\frac{1}{6}");
}

TEST(Render, XYText) {
  XYPoly p = XYPoly::x() * XYPoly::y();
  p.add_term(0, 2, lam({1, -1}));
  EXPECT_EQ(to_text(p), "x*y + (-lambda + 1)*y^2");
}
