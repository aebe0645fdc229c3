#ifndef TSB_XY_POLY_HPP
#define TSB_XY_POLY_HPP

#include <map>
#include <utility>

#include "tsb/dense_poly.hpp"

namespace tsb {

/// Sparse polynomial in x and y with LambdaPoly coefficients. Keys are
/// (x-exponent, y-exponent); zero coefficients are never stored, so the zero
/// polynomial is the empty map.
class XYPoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, LambdaPoly>;

  XYPoly() = default;
  explicit XYPoly(const LambdaPoly& c);
  /// Lifts an x-polynomial (y-degree 0).
  explicit XYPoly(const XPoly& p);

  static XYPoly zero() { return XYPoly(); }
  static XYPoly one() { return XYPoly(LambdaPoly::one()); }
  static XYPoly monomial(int xexp, int yexp, const LambdaPoly& c);
  static XYPoly x() { return monomial(1, 0, LambdaPoly::one()); }
  static XYPoly y() { return monomial(0, 1, LambdaPoly::one()); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  LambdaPoly coeff(int xexp, int yexp) const;
  int x_degree() const;
  int y_degree() const;

  XYPoly operator-() const;
  XYPoly& operator+=(const XYPoly& o);
  XYPoly& operator-=(const XYPoly& o);
  XYPoly& operator*=(const XYPoly& o) { return *this = *this * o; }
  friend XYPoly operator+(XYPoly a, const XYPoly& b) { return a += b; }
  friend XYPoly operator-(XYPoly a, const XYPoly& b) { return a -= b; }
  friend XYPoly operator*(const XYPoly& a, const XYPoly& b);
  friend XYPoly operator*(const XYPoly& a, const LambdaPoly& c);
  friend XYPoly operator*(const LambdaPoly& c, const XYPoly& a) { return a * c; }
  XYPoly scaled(const Rational& s) const;

  friend bool operator==(const XYPoly& a, const XYPoly& b) { return a.terms_ == b.terms_; }

  /// Adds c * x^xexp * y^yexp.
  void add_term(int xexp, int yexp, const LambdaPoly& c);

 private:
  Terms terms_;
};

XYPoly partial_x(const XYPoly& p);
XYPoly partial_y(const XYPoly& p);

/// p(lambda | x, 0) as an x-polynomial.
XPoly at_y_zero(const XYPoly& p);

/// p(lambda | x + y), fully expanded.
XYPoly shift_x(const XPoly& p);

/// The contraction x -> 0, y -> x.
XPoly contract(const XYPoly& p);

/// Exact value at (lambda0, x0, y0).
Rational evaluate(const XYPoly& p, const Rational& lambda0, const Rational& x0, const Rational& y0);

/// Partial evaluation in lambda; coefficients become constants.
XYPoly substitute_lambda(const XYPoly& p, const Rational& lambda0);

}  // namespace tsb

#endif  // TSB_XY_POLY_HPP
