#include "tsb/dense_poly.hpp"

#include <vector>

namespace tsb {

Rational evaluate(const XPoly& p, const Rational& lambda0, const Rational& x0) {
  return substitute_lambda(p, lambda0)(x0);
}

QXPoly substitute_lambda(const XPoly& p, const Rational& lambda0) {
  std::vector<Rational> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs.push_back(c(lambda0));
  return QXPoly(std::move(coeffs));
}

LambdaPoly substitute_x(const XPoly& p, const Rational& x0) { return p(x0); }

XPoly embed(const QXPoly& p) {
  std::vector<LambdaPoly> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs.emplace_back(c);
  return XPoly(std::move(coeffs));
}

}  // namespace tsb
