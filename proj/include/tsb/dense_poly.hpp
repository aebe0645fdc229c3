#ifndef TSB_DENSE_POLY_HPP
#define TSB_DENSE_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "tsb/rational.hpp"

namespace tsb {

struct LambdaVar {
  static constexpr const char* name = "lambda";
};
struct XVar {
  static constexpr const char* name = "x";
};

/// Dense univariate polynomial with coefficients in Coeff; Var tags the
/// indeterminate so that a polynomial in lambda and one in x never mix.
///
/// Canonical form: no trailing zero coefficients. The zero polynomial is the
/// empty coefficient sequence and has degree -1.
template <class Coeff, class Var>
class DensePoly {
 public:
  using coeff_type = Coeff;
  using var_type = Var;

  DensePoly() = default;
  DensePoly(const Coeff& c) : coeffs_{c} { normalize(); }  // NOLINT(google-explicit-constructor)
  explicit DensePoly(const Rational& c)
    requires(!std::is_same_v<Coeff, Rational>)
      : coeffs_{Coeff(c)} {
    normalize();
  }
  explicit DensePoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  DensePoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { normalize(); }

  static DensePoly zero() { return DensePoly(); }
  static DensePoly one() { return DensePoly(Coeff::one()); }
  /// c * var^k
  static DensePoly monomial(int k, const Coeff& c) {
    if (k < 0) throw std::invalid_argument("negative monomial exponent");
    std::vector<Coeff> v(static_cast<std::size_t>(k) + 1, Coeff::zero());
    v.back() = c;
    return DensePoly(std::move(v));
  }
  static DensePoly var() { return monomial(1, Coeff::one()); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Coeff> coeffs() const { return coeffs_; }
  /// Coefficient of var^i; zero outside the stored range.
  Coeff coeff(int i) const {
    if (i < 0 || i > degree()) return Coeff::zero();
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const Coeff& leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  DensePoly operator-() const {
    DensePoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return DensePoly(std::move(out));
  }
  friend DensePoly operator*(const DensePoly& a, const Coeff& c) {
    if (c.is_zero()) return DensePoly();
    DensePoly r = a;
    for (auto& x : r.coeffs_) x *= c;
    r.normalize();
    return r;
  }
  friend DensePoly operator*(const Coeff& c, const DensePoly& a) { return a * c; }

  /// Multiplies every coefficient by a rational scalar (recursively for
  /// nested coefficient rings).
  DensePoly scaled(const Rational& s) const {
    if (s.is_zero()) return DensePoly();
    DensePoly r = *this;
    for (auto& c : r.coeffs_) {
      if constexpr (std::is_same_v<Coeff, Rational>) {
        c *= s;
      } else {
        c = c.scaled(s);
      }
    }
    return r;
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Horner evaluation at v.
  template <class V>
  auto operator()(const V& v) const {
    using R = decltype(std::declval<Coeff>() * v);
    R acc = R(Coeff::zero());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + R(*it);
    return acc;
  }

  /// Strips trailing zeros. Idempotent; every mutating operation calls it.
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

 private:
  std::vector<Coeff> coeffs_;
};

/// d/dvar.
template <class Coeff, class Var>
DensePoly<Coeff, Var> derivative(const DensePoly<Coeff, Var>& p) {
  if (p.degree() < 1) return {};
  std::vector<Coeff> out;
  out.reserve(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) {
    if constexpr (std::is_same_v<Coeff, Rational>) {
      out.push_back(p.coeff(i) * Rational(i));
    } else {
      out.push_back(p.coeff(i).scaled(Rational(i)));
    }
  }
  return DensePoly<Coeff, Var>(std::move(out));
}

/// Antiderivative with zero constant term, i.e. the integral from 0.
template <class Coeff, class Var>
DensePoly<Coeff, Var> antiderivative(const DensePoly<Coeff, Var>& p) {
  if (p.is_zero()) return {};
  std::vector<Coeff> out;
  out.reserve(static_cast<std::size_t>(p.degree()) + 2);
  out.push_back(Coeff::zero());
  for (int i = 0; i <= p.degree(); ++i) {
    if constexpr (std::is_same_v<Coeff, Rational>) {
      out.push_back(p.coeff(i) / Rational(i + 1));
    } else {
      out.push_back(p.coeff(i).scaled(Rational(1, i + 1)));
    }
  }
  return DensePoly<Coeff, Var>(std::move(out));
}

/// Polynomial in lambda over Q: houses the degenerate Bernoulli numbers and
/// the epsilon products.
using LambdaPoly = DensePoly<Rational, LambdaVar>;
/// Polynomial in x whose coefficients are polynomials in lambda.
using XPoly = DensePoly<LambdaPoly, XVar>;
/// Polynomial in x over Q (an XPoly with lambda fixed to a number).
using QXPoly = DensePoly<Rational, XVar>;

/// Exact value of p at (lambda0, x0).
Rational evaluate(const XPoly& p, const Rational& lambda0, const Rational& x0);

/// Partial evaluation in lambda.
QXPoly substitute_lambda(const XPoly& p, const Rational& lambda0);

/// Substitutes x := x0, leaving a polynomial in lambda.
LambdaPoly substitute_x(const XPoly& p, const Rational& x0);

/// Embeds a rational x-polynomial as an XPoly with lambda-free coefficients.
XPoly embed(const QXPoly& p);

/// Embeds a lambda-polynomial as the constant (x-degree 0) XPoly.
inline XPoly constant_x(const LambdaPoly& c) { return XPoly(c); }

}  // namespace tsb

#endif  // TSB_DENSE_POLY_HPP
