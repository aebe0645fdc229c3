#ifndef TSB_SERIES_HPP
#define TSB_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tsb/dense_poly.hpp"
#include "tsb/xy_poly.hpp"

namespace tsb {

/// Division by a series whose t^0 coefficient is not 1.
class NonUnitDenominator : public std::domain_error {
 public:
  NonUnitDenominator() : std::domain_error("series division by a non-unit denominator") {}
};

/// Operands of a binary series operation were truncated at different orders.
class OrderMismatch : public std::invalid_argument {
 public:
  OrderMismatch(int a, int b)
      : std::invalid_argument("series order mismatch: " + std::to_string(a) + " vs " +
                              std::to_string(b)) {}
};

/// Power series in t truncated after t^order. C is the coefficient ring
/// (XPoly, XYPoly, or anything with zero()/one()/is_zero() and ring ops).
template <class C>
class TruncSeries {
 public:
  explicit TruncSeries(int order) : coeffs_(checked_size(order), C::zero()) {}
  TruncSeries(int order, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(checked_size(order), C::zero());
  }

  static TruncSeries one(int order) {
    TruncSeries s(order);
    s.coeffs_[0] = C::one();
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  void set(int n, C value) { coeffs_.at(static_cast<std::size_t>(n)) = std::move(value); }
  const std::vector<C>& coeffs() const { return coeffs_; }

  bool is_unit() const { return coeffs_[0] == C::one(); }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) {
    check_orders(a, b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
  }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) {
    check_orders(a, b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
  }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

  static void check_orders(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
  }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    return static_cast<std::size_t>(order) + 1;
  }

  std::vector<C> coeffs_;
};

using XSeries = TruncSeries<XPoly>;
using XYSeries = TruncSeries<XYPoly>;

/// Truncated Cauchy product.
template <class C>
TruncSeries<C> series_mul(const TruncSeries<C>& a, const TruncSeries<C>& b) {
  TruncSeries<C>::check_orders(a, b);
  const int order = a.order();
  std::vector<C> out(static_cast<std::size_t>(order) + 1, C::zero());
  for (int i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return TruncSeries<C>(order, std::move(out));
}

/// q with q * b = a through t^order, by forward substitution. b must be a unit.
template <class C>
TruncSeries<C> series_div(const TruncSeries<C>& a, const TruncSeries<C>& b) {
  TruncSeries<C>::check_orders(a, b);
  if (!b.is_unit()) throw NonUnitDenominator();
  const int order = a.order();
  std::vector<C> q;
  q.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    C acc = a[n];
    for (int k = 1; k <= n; ++k) {
      if (!b[k].is_zero()) acc -= b[k] * q[static_cast<std::size_t>(n - k)];
    }
    q.push_back(std::move(acc));
  }
  return TruncSeries<C>(order, std::move(q));
}

/// Lifts an XPoly-coefficient series into the bivariate coefficient ring.
XYSeries lift(const XSeries& s);

/// Argument of the lambda-exponential series: exp_lambda(t) or exp_lambda(t x).
enum class ExpArg { T, TX };

/// sum_n eps^-(n) arg^n / n!, truncated at t^order.
XSeries exp_lambda_series(int order, ExpArg arg);

/// exp_lambda(t^r y): the t^(r l) coefficient is eps^-(l) y^l / l!.
XYSeries exp_lambda_series_try(int order, int r);

/// (exp_lambda(t) - 1) / t = sum_k eps^-(k+1) t^k / (k+1)!; a unit series.
XSeries shifted_exp_lambda_series(int order);

/// t exp_lambda(t x) / (exp_lambda(t) - 1). The n-th coefficient times n! is
/// the deformed Bernoulli polynomial of degree n.
XSeries beta_generating_series(int order);

/// t / (exp_lambda(t) - 1): the degenerate Bernoulli numbers' generating
/// function (n! times the t^n coefficient is beta_n(lambda)).
XSeries degenerate_numbers_series(int order);

/// t exp_lambda(t x) exp_lambda(t^r y) / (exp_lambda(t) - 1).
XYSeries bivariate_generating_series(int order, int r);

/// (1/lambda)((1 + lambda t)^x - 1) = sum_{n>=1} lambda^(n-1) (x)_n t^n / n!.
/// Throws for order < 1.
XSeries log_expx_series(int order);

/// The falling factorial x(x-1)...(x-n+1) as an x-polynomial.
QXPoly falling_factorial(int n);

}  // namespace tsb

#endif  // TSB_SERIES_HPP
