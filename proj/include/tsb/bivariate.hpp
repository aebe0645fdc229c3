#ifndef TSB_BIVARIATE_HPP
#define TSB_BIVARIATE_HPP

#include <string_view>
#include <utility>
#include <vector>

#include "tsb/xy_poly.hpp"

namespace tsb {

// Two-variable family beta~^(r)_n(lambda|x, y) generated by
//   t exp_lambda(t x) exp_lambda(t^r y) / (exp_lambda(t) - 1).

enum class BivariateRoute { Recurrence, DoubleSum, Connection, Series };

std::string_view bivariate_route_name(BivariateRoute route);
BivariateRoute parse_bivariate_route(std::string_view name);

struct BivariateFamily {
  int max_n = 0;
  int r = 1;
  std::vector<XYPoly> polys;
};

BivariateFamily beta_r_family(int max_n, int r, BivariateRoute route);

XYPoly beta_r_recurrence(int n, int r);
XYPoly beta_r_double_sum(int n, int r);
XYPoly beta_r_connection(int n, int r);
/// n! [t^n] of the generating function.
XYPoly beta_r_series(int n, int r);

/// Both members of d/dx b_n = n (b_{n-1} - lambda x d/dx b_{n-1}); n >= 1.
std::pair<XYPoly, XYPoly> partial_x_check(const BivariateFamily& family, int n);
std::pair<XYPoly, XYPoly> partial_x_check(int n, int r);

/// Both members of d/dy b_n = n!/(n-r)! (b_{n-r} - lambda y d/dy b_{n-r}); n >= r.
std::pair<XYPoly, XYPoly> partial_y_check(const BivariateFamily& family, int n);
std::pair<XYPoly, XYPoly> partial_y_check(int n, int r);

}  // namespace tsb

#endif  // TSB_BIVARIATE_HPP
