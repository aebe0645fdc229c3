#include "tsb/routes.hpp"

#include <stdexcept>

#include "tsb/hessenberg.hpp"

namespace tsb {

BetaFamily compute_family(int max_n, Route route) {
  if (max_n < 0) throw std::invalid_argument("compute_family: max_n must be non-negative");
  BetaFamily family;
  family.max_n = max_n;
  family.route = route;
  switch (route) {
    case Route::Recurrence:
      family.polys = beta_tilde_recurrence_family(max_n);
      break;
    case Route::Explicit:
      family.polys = beta_tilde_explicit_family(max_n);
      break;
    case Route::Determinant:
      family.polys = beta_tilde_determinant_family(max_n);
      break;
    case Route::Series:
      family.polys = beta_tilde_series_family(max_n);
      break;
  }
  family.numbers.reserve(family.polys.size());
  for (const auto& p : family.polys) family.numbers.push_back(p.coeff(0));
  return family;
}

XPoly compute_beta_tilde(int n, Route route) {
  switch (route) {
    case Route::Recurrence:
      return beta_tilde_recurrence(n);
    case Route::Explicit:
      return beta_tilde_explicit(n);
    case Route::Determinant:
      return beta_tilde_determinant(n);
    case Route::Series:
      return beta_tilde_series(n);
  }
  throw std::invalid_argument("compute_beta_tilde: unknown route");
}

}  // namespace tsb
