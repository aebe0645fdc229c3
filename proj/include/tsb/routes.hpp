#ifndef TSB_ROUTES_HPP
#define TSB_ROUTES_HPP

#include "tsb/bernoulli.hpp"

namespace tsb {

/// beta~_0..beta~_max_n by the requested route, together with the degenerate
/// Bernoulli numbers read off as the x = 0 values of those polynomials.
BetaFamily compute_family(int max_n, Route route);

/// Single polynomial by the requested route.
XPoly compute_beta_tilde(int n, Route route);

}  // namespace tsb

#endif  // TSB_ROUTES_HPP
