#ifndef TSB_VERIFY_HPP
#define TSB_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tsb/dense_poly.hpp"

namespace tsb {

// Identity suites behind `tsb verify`. Each suite checks its identities for
// every n up to max_n (some suites cap n where the check gets expensive, see
// the suite descriptions) and reports one CheckResult per identity.

enum class Suite { All, Routes, Translation, Appell, Determinant, Bivariate, Classical, Numeric, XnExpansion };

std::string_view suite_name(Suite suite);
Suite parse_suite(std::string_view name);

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;  ///< first failing case, empty on success
};

std::vector<CheckResult> run_suite(Suite suite, int max_n);

/// Classical Bernoulli polynomials B_0..B_max_n from t e^{tx} / (e^t - 1),
/// built over Q without any lambda machinery.
std::vector<QXPoly> classical_bernoulli_polynomials(int max_n);

}  // namespace tsb

#endif  // TSB_VERIFY_HPP
