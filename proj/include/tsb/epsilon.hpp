#ifndef TSB_EPSILON_HPP
#define TSB_EPSILON_HPP

#include <vector>

#include "tsb/dense_poly.hpp"

namespace tsb {

enum class Sign { Plus, Minus };

/// eps^(+/-)(n) = prod_{j=0}^{n-1} (1 +/- j lambda); eps(0) = 1.
///
/// eps^- (n) / n! are the Taylor coefficients of exp_lambda(X) and
/// (-1)^n eps^+(n) / n! those of its reciprocal.
LambdaPoly epsilon(int n, Sign sign);

/// Tabulated eps^+ and eps^- for 0..max_n, built by the running product
/// eps(n) = eps(n-1) (1 +/- (n-1) lambda).
class EpsilonTable {
 public:
  explicit EpsilonTable(int max_n);

  int max_n() const { return static_cast<int>(minus_.size()) - 1; }
  const LambdaPoly& plus(int n) const { return plus_.at(static_cast<std::size_t>(n)); }
  const LambdaPoly& minus(int n) const { return minus_.at(static_cast<std::size_t>(n)); }
  const LambdaPoly& operator()(int n, Sign sign) const {
    return sign == Sign::Plus ? plus(n) : minus(n);
  }

 private:
  std::vector<LambdaPoly> plus_;
  std::vector<LambdaPoly> minus_;
};

/// Rows 0..max_n of Pascal's triangle as exact integers.
class PascalTriangle {
 public:
  explicit PascalTriangle(int max_n);

  /// C(n, k); zero for k < 0 or k > n.
  const Rational& operator()(int n, int k) const;
  int max_n() const { return static_cast<int>(rows_.size()) - 1; }

 private:
  std::vector<std::vector<Rational>> rows_;
  Rational zero_;
};

}  // namespace tsb

#endif  // TSB_EPSILON_HPP
