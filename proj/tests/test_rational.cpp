#include <random>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tsb/rational.hpp"

using tsb::Rational;

TEST(Rational, CanonicalForm) {
  const Rational r(6, -8);
  EXPECT_EQ(r.to_string(), "-3/4");
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_EQ(Rational(0, 5).denominator(), 1);
  EXPECT_EQ(Rational(10, 5).to_string(), "2");
}

TEST(Rational, ParseAcceptsCanonicalAndReducesOthers) {
  EXPECT_EQ(Rational::parse("-1/2"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("0"), Rational());
  EXPECT_EQ(Rational::parse("4/-6").to_string(), "-2/3");
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/10").to_string(),
            "12345678901234567890123456789");
}

TEST(Rational, ParseRejectsMalformed) {
  EXPECT_THROW(Rational::parse("0.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("a/2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Rational a = tsb::oracle::random_rational(rng, 50);
    const Rational b = tsb::oracle::random_rational(rng, 50);
    const Rational c = tsb::oracle::random_rational(rng, 50);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
    // parse(to_string(a)) is the identity
    EXPECT_EQ(Rational::parse(a.to_string()), a);
  }
}

TEST(Rational, FactorialAndPow) {
  EXPECT_EQ(tsb::factorial(0), Rational(1));
  EXPECT_EQ(tsb::factorial(20).to_string(), "2432902008176640000");
  EXPECT_EQ(tsb::pow(Rational(-1, 2), 3), Rational(-1, 8));
  EXPECT_THROW(tsb::factorial(-1), std::invalid_argument);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_GT(Rational(2, 3), Rational(1, 2));
  std::ostringstream os;
  os << Rational(-7, 3);
  EXPECT_EQ(os.str(), "-7/3");
}
