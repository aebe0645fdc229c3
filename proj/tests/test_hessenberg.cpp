#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tsb/hessenberg.hpp"

using namespace tsb;
using tsb::oracle::lam;

TEST(Hessenberg, OneByOne) {
  HessMatrix<Rational> m(1);
  m(1, 1) = Rational(-7, 3);
  EXPECT_EQ(hessenberg_det(m), Rational(-7, 3));
  EXPECT_EQ(hessenberg_det(HessMatrix<Rational>(0)), Rational(1));
}

TEST(Hessenberg, TwoByTwoPolynomial) {
  HessMatrix<XPoly> m(2);
  m(1, 1) = XPoly::one();
  m(1, 2) = XPoly::var();
  m(2, 1) = XPoly::one();
  m(2, 2) = XPoly(lam({Rational(1, 2), Rational(-1, 2)}));
  EXPECT_EQ(hessenberg_det(m), XPoly({lam({Rational(1, 2), Rational(-1, 2)}), lam({-1})}));
}

TEST(Hessenberg, ThreeByThreeNumeric) {
  HessMatrix<Rational> m(3);
  const int v[3][3] = {{1, 2, 3}, {4, 5, 6}, {0, 7, 8}};
  for (int j = 1; j <= 3; ++j) {
    for (int l = 1; l <= 3; ++l) m(j, l) = Rational(v[j - 1][l - 1]);
  }
  EXPECT_EQ(hessenberg_det(m), Rational(18));
  EXPECT_EQ(oracle::laplace_det(oracle::to_rows(m)), Rational(18));
}

TEST(Hessenberg, MatchesLaplaceOnRandomMatrices) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> order(1, 6);
  for (int i = 0; i < 60; ++i) {
    const auto m = oracle::random_hessenberg(rng, order(rng));
    EXPECT_EQ(hessenberg_det(m), oracle::laplace_det(oracle::to_rows(m)));
  }
}

TEST(Hessenberg, MatchesLaplaceWithPolynomialEntries) {
  std::mt19937_64 rng(100);
  for (int order = 1; order <= 4; ++order) {
    HessMatrix<XPoly> m(order);
    for (int j = 1; j <= order; ++j) {
      for (int l = std::max(1, j - 1); l <= order; ++l) m(j, l) = oracle::random_xpoly(rng, 2);
    }
    EXPECT_EQ(hessenberg_det(m), oracle::laplace_det(oracle::to_rows(m)));
  }
}

TEST(Hessenberg, RejectsNonHessenberg) {
  HessMatrix<Rational> m(3);
  m(3, 1) = Rational(1);
  EXPECT_FALSE(m.is_upper_hessenberg());
  EXPECT_THROW(hessenberg_det(m), std::invalid_argument);
  EXPECT_THROW(m(0, 1), std::out_of_range);
  EXPECT_THROW(HessMatrix<Rational>(-1), std::invalid_argument);
}

TEST(DMatrix, Entries) {
  const auto d1 = build_D_matrix(1);
  ASSERT_EQ(d1.order(), 2);
  EXPECT_EQ(d1(1, 1), XPoly::one());
  EXPECT_EQ(d1(1, 2), XPoly::var());
  EXPECT_EQ(d1(2, 1), XPoly::one());
  EXPECT_EQ(d1(2, 2), XPoly(lam({Rational(1, 2), Rational(-1, 2)})));

  const auto d4 = build_D_matrix(4);
  ASSERT_EQ(d4.order(), 5);
  EXPECT_TRUE(d4.is_upper_hessenberg());
  EXPECT_EQ(d4(2, 1), XPoly::one());
  EXPECT_EQ(d4(3, 2), XPoly::one());
  EXPECT_EQ(d4(3, 3), XPoly(lam({1, -1})));
  EXPECT_EQ(d4(4, 3), XPoly(lam({2})));
  EXPECT_EQ(d4(5, 4), XPoly(lam({3})));
  EXPECT_EQ(d4(1, 5), XPoly::monomial(4, oracle::eps_minus(4)));
  EXPECT_THROW(build_D_matrix(0), std::invalid_argument);
}

TEST(DMatrix, DeterminantGivesListedPolynomials) {
  const auto listed = oracle::listed_polynomials();
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(beta_tilde_determinant(n), listed[n]) << n;
}

TEST(DMatrix, DeterminantMatchesLaplaceOnSmallOrders) {
  for (int n = 1; n <= 4; ++n) {
    const auto d = build_D_matrix(n);
    EXPECT_EQ(hessenberg_det(d), oracle::laplace_det(oracle::to_rows(d))) << n;
  }
}
