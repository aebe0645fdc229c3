#include "tsb/series.hpp"

#include "tsb/epsilon.hpp"

namespace tsb {

XYSeries lift(const XSeries& s) {
  std::vector<XYPoly> coeffs;
  coeffs.reserve(s.coeffs().size());
  for (const auto& c : s.coeffs()) coeffs.emplace_back(c);
  return XYSeries(s.order(), std::move(coeffs));
}

XSeries exp_lambda_series(int order, ExpArg arg) {
  XSeries s(order);
  const EpsilonTable eps(order);
  for (int n = 0; n <= order; ++n) {
    const LambdaPoly c = eps.minus(n).scaled(Rational(1) / factorial(n));
    s.set(n, arg == ExpArg::TX ? XPoly::monomial(n, c) : XPoly(c));
  }
  return s;
}

XYSeries exp_lambda_series_try(int order, int r) {
  if (r < 1) throw std::invalid_argument("exp_lambda_series: r must be >= 1");
  XYSeries s(order);
  const EpsilonTable eps(order / r);
  for (int l = 0; r * l <= order; ++l) {
    s.set(r * l, XYPoly::monomial(0, l, eps.minus(l).scaled(Rational(1) / factorial(l))));
  }
  return s;
}

XSeries shifted_exp_lambda_series(int order) {
  XSeries s(order);
  const EpsilonTable eps(order + 1);
  for (int k = 0; k <= order; ++k) {
    s.set(k, XPoly(eps.minus(k + 1).scaled(Rational(1) / factorial(k + 1))));
  }
  return s;
}

XSeries beta_generating_series(int order) {
  return series_div(exp_lambda_series(order, ExpArg::TX), shifted_exp_lambda_series(order));
}

XSeries degenerate_numbers_series(int order) {
  return series_div(XSeries::one(order), shifted_exp_lambda_series(order));
}

XYSeries bivariate_generating_series(int order, int r) {
  const XYSeries numerator =
      series_mul(lift(exp_lambda_series(order, ExpArg::TX)), exp_lambda_series_try(order, r));
  return series_div(numerator, lift(shifted_exp_lambda_series(order)));
}

QXPoly falling_factorial(int n) {
  if (n < 0) throw std::invalid_argument("falling_factorial: n must be non-negative");
  QXPoly p = QXPoly::one();
  for (int j = 0; j < n; ++j) p *= QXPoly{Rational(-j), Rational(1)};
  return p;
}

XSeries log_expx_series(int order) {
  if (order < 1) throw std::invalid_argument("log_expx_series: order must be >= 1");
  XSeries s(order);
  for (int n = 1; n <= order; ++n) {
    const XPoly ff = embed(falling_factorial(n));
    const LambdaPoly lambda_power = LambdaPoly::monomial(n - 1, Rational(1) / factorial(n));
    s.set(n, ff * lambda_power);
  }
  return s;
}

}  // namespace tsb
