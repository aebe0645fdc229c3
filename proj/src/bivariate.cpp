#include "tsb/bivariate.hpp"

#include <stdexcept>
#include <string>

#include "tsb/bernoulli.hpp"
#include "tsb/epsilon.hpp"
#include "tsb/series.hpp"

namespace tsb {

namespace {

void require_args(int n, int r) {
  if (n < 0) throw std::invalid_argument("bivariate: n must be non-negative");
  if (r < 1) throw std::invalid_argument("bivariate: r must be >= 1");
}

std::vector<XYPoly> recurrence_family(int max_n, int r) {
  const EpsilonTable eps(max_n + 1);
  const PascalTriangle binom(max_n + 1);
  std::vector<XYPoly> polys;
  polys.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    XYPoly source;
    for (int l = 0; r * l <= n; ++l) {
      const Rational c = factorial(n) / (factorial(n - r * l) * factorial(l));
      source.add_term(n - r * l, l, (eps.minus(l) * eps.minus(n - r * l)).scaled(c));
    }
    XYPoly sum;
    for (int l = 0; l < n; ++l) {
      sum += polys[static_cast<std::size_t>(l)] * eps.minus(n + 1 - l).scaled(binom(n + 1, l));
    }
    polys.push_back(source - sum.scaled(Rational(1, n + 1)));
  }
  return polys;
}

std::vector<XYPoly> double_sum_family(int max_n, int r) {
  const auto numbers = degenerate_bernoulli_numbers(max_n);
  const EpsilonTable eps(max_n);
  std::vector<XYPoly> polys;
  polys.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    XYPoly p;
    for (int j = 0; j <= n; ++j) {
      for (int l = 0; j + r * l <= n; ++l) {
        const int rest = n - j - r * l;
        const Rational c = factorial(n) / (factorial(j) * factorial(l) * factorial(rest));
        p.add_term(j, l, (eps.minus(j) * eps.minus(l) * numbers[static_cast<std::size_t>(rest)]).scaled(c));
      }
    }
    polys.push_back(std::move(p));
  }
  return polys;
}

std::vector<XYPoly> connection_family(int max_n, int r) {
  const auto single = beta_tilde_recurrence_family(max_n);
  const EpsilonTable eps(max_n);
  std::vector<XYPoly> polys;
  polys.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    XYPoly p;
    for (int l = 0; r * l <= n; ++l) {
      const Rational c = factorial(n) / (factorial(l) * factorial(n - r * l));
      p += XYPoly(single[static_cast<std::size_t>(n - r * l)]) *
           XYPoly::monomial(0, l, eps.minus(l).scaled(c));
    }
    polys.push_back(std::move(p));
  }
  return polys;
}

std::vector<XYPoly> series_family(int max_n, int r) {
  const XYSeries gen = bivariate_generating_series(max_n, r);
  std::vector<XYPoly> polys;
  polys.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) polys.push_back(gen[n].scaled(factorial(n)));
  return polys;
}

XYPoly lambda_poly_var(int xexp, int yexp) {
  return XYPoly::monomial(xexp, yexp, LambdaPoly::var());
}

}  // namespace

std::string_view bivariate_route_name(BivariateRoute route) {
  switch (route) {
    case BivariateRoute::Recurrence:
      return "recurrence";
    case BivariateRoute::DoubleSum:
      return "double-sum";
    case BivariateRoute::Connection:
      return "connection";
    case BivariateRoute::Series:
      return "series";
  }
  return "unknown";
}

BivariateRoute parse_bivariate_route(std::string_view name) {
  for (auto r : {BivariateRoute::Recurrence, BivariateRoute::DoubleSum, BivariateRoute::Connection,
                 BivariateRoute::Series}) {
    if (bivariate_route_name(r) == name) return r;
  }
  throw std::invalid_argument("unknown bivariate route '" + std::string(name) + "'");
}

BivariateFamily beta_r_family(int max_n, int r, BivariateRoute route) {
  require_args(max_n, r);
  BivariateFamily family{max_n, r, {}};
  switch (route) {
    case BivariateRoute::Recurrence:
      family.polys = recurrence_family(max_n, r);
      break;
    case BivariateRoute::DoubleSum:
      family.polys = double_sum_family(max_n, r);
      break;
    case BivariateRoute::Connection:
      family.polys = connection_family(max_n, r);
      break;
    case BivariateRoute::Series:
      family.polys = series_family(max_n, r);
      break;
  }
  return family;
}

XYPoly beta_r_recurrence(int n, int r) {
  return beta_r_family(n, r, BivariateRoute::Recurrence).polys.back();
}
XYPoly beta_r_double_sum(int n, int r) {
  return beta_r_family(n, r, BivariateRoute::DoubleSum).polys.back();
}
XYPoly beta_r_connection(int n, int r) {
  return beta_r_family(n, r, BivariateRoute::Connection).polys.back();
}
XYPoly beta_r_series(int n, int r) { return beta_r_family(n, r, BivariateRoute::Series).polys.back(); }

std::pair<XYPoly, XYPoly> partial_x_check(const BivariateFamily& family, int n) {
  if (n < 1 || n > family.max_n) throw std::invalid_argument("partial_x_check: n out of range");
  const XYPoly& prev = family.polys[static_cast<std::size_t>(n - 1)];
  XYPoly lhs = partial_x(family.polys[static_cast<std::size_t>(n)]);
  XYPoly rhs = (prev - lambda_poly_var(1, 0) * partial_x(prev)).scaled(Rational(n));
  return {std::move(lhs), std::move(rhs)};
}

std::pair<XYPoly, XYPoly> partial_x_check(int n, int r) {
  require_args(n, r);
  return partial_x_check(beta_r_family(n, r, BivariateRoute::Recurrence), n);
}

std::pair<XYPoly, XYPoly> partial_y_check(const BivariateFamily& family, int n) {
  const int r = family.r;
  if (n < r || n > family.max_n) throw std::invalid_argument("partial_y_check: n out of range");
  const XYPoly& prev = family.polys[static_cast<std::size_t>(n - r)];
  XYPoly lhs = partial_y(family.polys[static_cast<std::size_t>(n)]);
  const Rational c = factorial(n) / factorial(n - r);
  XYPoly rhs = (prev - lambda_poly_var(0, 1) * partial_y(prev)).scaled(c);
  return {std::move(lhs), std::move(rhs)};
}

std::pair<XYPoly, XYPoly> partial_y_check(int n, int r) {
  require_args(n, r);
  return partial_y_check(beta_r_family(n, r, BivariateRoute::Recurrence), n);
}

}  // namespace tsb
