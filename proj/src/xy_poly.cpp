#include "tsb/xy_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace tsb {

XYPoly::XYPoly(const LambdaPoly& c) {
  if (!c.is_zero()) terms_.emplace(Key{0, 0}, c);
}

XYPoly::XYPoly(const XPoly& p) {
  for (int k = 0; k <= p.degree(); ++k) {
    if (!p.coeff(k).is_zero()) terms_.emplace(Key{k, 0}, p.coeff(k));
  }
}

XYPoly XYPoly::monomial(int xexp, int yexp, const LambdaPoly& c) {
  if (xexp < 0 || yexp < 0) throw std::invalid_argument("negative monomial exponent");
  XYPoly r;
  r.add_term(xexp, yexp, c);
  return r;
}

LambdaPoly XYPoly::coeff(int xexp, int yexp) const {
  const auto it = terms_.find(Key{xexp, yexp});
  return it == terms_.end() ? LambdaPoly() : it->second;
}

int XYPoly::x_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first);
  return d;
}

int XYPoly::y_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.second);
  return d;
}

void XYPoly::add_term(int xexp, int yexp, const LambdaPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{xexp, yexp}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

XYPoly XYPoly::operator-() const {
  XYPoly r = *this;
  for (auto& [key, c] : r.terms_) c = -c;
  return r;
}

XYPoly& XYPoly::operator+=(const XYPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

XYPoly& XYPoly::operator-=(const XYPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

XYPoly operator*(const XYPoly& a, const XYPoly& b) {
  XYPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return r;
}

XYPoly operator*(const XYPoly& a, const LambdaPoly& c) {
  XYPoly r;
  if (c.is_zero()) return r;
  for (const auto& [key, coeff] : a.terms_) r.add_term(key.first, key.second, coeff * c);
  return r;
}

XYPoly XYPoly::scaled(const Rational& s) const {
  XYPoly r;
  if (s.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& [key, c] : r.terms_) c = c.scaled(s);
  return r;
}

XYPoly partial_x(const XYPoly& p) {
  XYPoly r;
  for (const auto& [key, c] : p.terms()) {
    if (key.first > 0) r.add_term(key.first - 1, key.second, c.scaled(Rational(key.first)));
  }
  return r;
}

XYPoly partial_y(const XYPoly& p) {
  XYPoly r;
  for (const auto& [key, c] : p.terms()) {
    if (key.second > 0) r.add_term(key.first, key.second - 1, c.scaled(Rational(key.second)));
  }
  return r;
}

XPoly at_y_zero(const XYPoly& p) {
  std::vector<LambdaPoly> coeffs(static_cast<std::size_t>(std::max(p.x_degree(), 0)) + 1);
  for (const auto& [key, c] : p.terms()) {
    if (key.second == 0) coeffs[static_cast<std::size_t>(key.first)] = c;
  }
  return XPoly(std::move(coeffs));
}

XYPoly shift_x(const XPoly& p) {
  // Horner in (x + y).
  const XYPoly x_plus_y = XYPoly::x() + XYPoly::y();
  XYPoly acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * x_plus_y + XYPoly(p.coeff(k));
  return acc;
}

XPoly contract(const XYPoly& p) {
  std::vector<LambdaPoly> coeffs(static_cast<std::size_t>(std::max(p.y_degree(), 0)) + 1);
  for (const auto& [key, c] : p.terms()) {
    if (key.first == 0) coeffs[static_cast<std::size_t>(key.second)] = c;
  }
  return XPoly(std::move(coeffs));
}

Rational evaluate(const XYPoly& p, const Rational& lambda0, const Rational& x0, const Rational& y0) {
  Rational total;
  for (const auto& [key, c] : p.terms()) {
    total += c(lambda0) * pow(x0, key.first) * pow(y0, key.second);
  }
  return total;
}

XYPoly substitute_lambda(const XYPoly& p, const Rational& lambda0) {
  XYPoly r;
  for (const auto& [key, c] : p.terms()) r.add_term(key.first, key.second, LambdaPoly(c(lambda0)));
  return r;
}

}  // namespace tsb
