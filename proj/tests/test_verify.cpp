#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tsb/verify.hpp"

using namespace tsb;

TEST(Verify, EverySuitePassesAtSmallDegree) {
  for (Suite s : {Suite::Routes, Suite::Translation, Suite::Appell, Suite::Determinant, Suite::Bivariate,
                  Suite::Classical, Suite::Numeric, Suite::XnExpansion}) {
    const auto results = run_suite(s, 6);
    EXPECT_FALSE(results.empty()) << suite_name(s);
    for (const auto& r : results) EXPECT_TRUE(r.passed) << r.suite << " " << r.name << " " << r.detail;
  }
}

TEST(Verify, AllIsTheUnionOfSuites) {
  const auto all = run_suite(Suite::All, 4);
  std::set<std::string> suites;
  for (const auto& r : all) suites.insert(r.suite);
  EXPECT_EQ(suites.size(), 8u);
}

TEST(Verify, SuiteNames) {
  EXPECT_EQ(parse_suite("xnexpansion"), Suite::XnExpansion);
  EXPECT_EQ(suite_name(Suite::Appell), "appell");
  EXPECT_THROW(parse_suite("everything"), std::invalid_argument);
}

TEST(Verify, ClassicalPolynomialsMatchOracle) {
  const auto mine = classical_bernoulli_polynomials(14);
  const auto ref = oracle::classical_bernoulli(14);
  for (int n = 0; n <= 14; ++n) EXPECT_EQ(mine[n], QXPoly(ref[n])) << n;
}
