#include "tsb/numeric.hpp"

#include <cmath>
#include <vector>

namespace tsb {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw NumericDomainError(std::string(name) + " must be finite");
}

double checked_result(double v, const char* what) {
  if (std::isnan(v)) throw NumericDomainError(std::string(what) + ": result is not a number");
  if (std::isinf(v)) throw NumericOverflowError(std::string(what) + ": result overflows double");
  return v;
}

}  // namespace

double exp_lambda(double x, double lambda) {
  require_finite(x, "X");
  require_finite(lambda, "lambda");
  if (lambda == 0.0) return checked_result(std::exp(x), "exp_lambda");
  const double base = 1.0 + lambda * x;
  if (base <= 0.0) throw NumericDomainError("exp_lambda: 1 + lambda*X must be positive");
  // log1p keeps (1 + lambda X) accurate when lambda X is tiny.
  return checked_result(std::exp(std::log1p(lambda * x) / lambda), "exp_lambda");
}

double log_lambda(double x, double lambda) {
  require_finite(x, "X");
  require_finite(lambda, "lambda");
  if (x <= 0.0) throw NumericDomainError("log_lambda: X must be positive");
  if (lambda == 0.0) return std::log(x);
  return checked_result(std::expm1(lambda * std::log(x)) / lambda, "log_lambda");
}

double product_form_exp(double t, double x, double lambda, int terms) {
  require_finite(t, "t");
  require_finite(x, "x");
  require_finite(lambda, "lambda");
  if (terms < 1) throw NumericDomainError("product_form_exp: at least one term is required");
  const double tx = t * x;
  if (std::abs(lambda * tx) >= 1.0) {
    throw NumericDomainError("product_form_exp: requires |lambda t x| < 1");
  }
  double exponent = 0.0;
  double power = tx;  // (-lambda)^l (tx)^(l+1)
  for (int l = 0; l < terms; ++l) {
    exponent += power / static_cast<double>(l + 1);
    power *= -lambda * tx;
  }
  return checked_result(std::exp(exponent), "product_form_exp");
}

double evaluate_double(const XPoly& p, double lambda0, double x0) {
  double acc = 0.0;
  for (int k = p.degree(); k >= 0; --k) {
    const LambdaPoly c = p.coeff(k);
    double cv = 0.0;
    for (int i = c.degree(); i >= 0; --i) cv = cv * lambda0 + c.coeff(i).to_double();
    acc = acc * x0 + cv;
  }
  return acc;
}

double evaluation_magnitude(const XPoly& p, double lambda0, double x0) {
  std::vector<LambdaPoly> coeffs;
  for (const auto& c : p.coeffs()) {
    std::vector<Rational> abs_c;
    for (const auto& v : c.coeffs()) abs_c.push_back(v.sign() < 0 ? -v : v);
    coeffs.emplace_back(std::move(abs_c));
  }
  return evaluate_double(XPoly(std::move(coeffs)), std::abs(lambda0), std::abs(x0));
}

}  // namespace tsb
