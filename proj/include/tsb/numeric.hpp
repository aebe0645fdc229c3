#ifndef TSB_NUMERIC_HPP
#define TSB_NUMERIC_HPP

#include <stdexcept>
#include <string>

#include "tsb/dense_poly.hpp"

namespace tsb {

// Double-precision evaluation of the deformed exponential and logarithm.
// Results are always finite: out-of-domain arguments raise NumericDomainError
// and results that leave the double range raise NumericOverflowError.

class NumericDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NumericOverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// (1 + lambda X)^(1/lambda); exp(X) when lambda is exactly 0.
double exp_lambda(double x, double lambda);

/// (X^lambda - 1) / lambda; ln(X) when lambda is exactly 0. Requires X > 0.
double log_lambda(double x, double lambda);

/// exp( sum_{l=0}^{terms-1} (-1)^l lambda^l (t x)^(l+1) / (l+1) ), the
/// truncated product form of exp_lambda(t x). Requires |lambda t x| < 1 and
/// terms >= 1.
double product_form_exp(double t, double x, double lambda, int terms);

/// Horner evaluation of p at (lambda0, x0) in double precision.
double evaluate_double(const XPoly& p, double lambda0, double x0);

/// sum |c_ik| |lambda0|^i |x0|^k over all coefficients: the scale against
/// which the rounding error of evaluate_double is measured (it stays
/// meaningful at roots and under cancellation).
double evaluation_magnitude(const XPoly& p, double lambda0, double x0);

}  // namespace tsb

#endif  // TSB_NUMERIC_HPP
