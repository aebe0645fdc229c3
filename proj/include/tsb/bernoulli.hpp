#ifndef TSB_BERNOULLI_HPP
#define TSB_BERNOULLI_HPP

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "tsb/dense_poly.hpp"
#include "tsb/epsilon.hpp"
#include "tsb/xy_poly.hpp"

namespace tsb {

/// The four independent ways of producing beta~_n(lambda|x).
enum class Route { Recurrence, Explicit, Determinant, Series };

std::string_view route_name(Route route);
/// Throws std::invalid_argument for unknown names.
Route parse_route(std::string_view name);

struct BetaFamily {
  int max_n = 0;
  std::vector<LambdaPoly> numbers;  ///< beta_n(lambda), n = 0..max_n
  std::vector<XPoly> polys;         ///< beta~_n(lambda|x), n = 0..max_n
  Route route = Route::Recurrence;
};

/// Tables shared by every computation up to a fixed degree: epsilon products,
/// binomials, degenerate Bernoulli numbers and the recurrence-route family.
/// Built once, then read-only.
class BernoulliContext {
 public:
  explicit BernoulliContext(int max_n);

  int max_n() const { return max_n_; }
  const EpsilonTable& eps() const { return eps_; }
  const PascalTriangle& binom() const { return binom_; }
  const std::vector<LambdaPoly>& numbers() const { return numbers_; }
  const std::vector<XPoly>& polys() const { return polys_; }
  const XPoly& poly(int n) const { return polys_.at(static_cast<std::size_t>(n)); }

 private:
  int max_n_;
  EpsilonTable eps_;
  PascalTriangle binom_;
  std::vector<LambdaPoly> numbers_;
  std::vector<XPoly> polys_;
};

/// beta_n(lambda) for n = 0..max_n from the x = 0 specialization of the
/// recurrence.
std::vector<LambdaPoly> degenerate_bernoulli_numbers(int max_n);

/// beta~_n = eps^-(n) x^n - 1/(n+1) sum_{k<n} C(n+1,k) eps^-(n+1-k) beta~_k.
std::vector<XPoly> beta_tilde_recurrence_family(int max_n);
XPoly beta_tilde_recurrence(int n);

/// beta~_n = sum_k C(n,k) eps^-(k) beta_{n-k}(lambda) x^k.
std::vector<XPoly> beta_tilde_explicit_family(int max_n);
XPoly beta_tilde_explicit(int n);

/// n! [t^n] of t exp_lambda(tx) / (exp_lambda(t) - 1).
std::vector<XPoly> beta_tilde_series_family(int max_n);
XPoly beta_tilde_series(int n);

/// The right member of the translation formula
///   sum_{k+l<=n} (-1)^k n!/(k! l! (n-k-l)!) eps^+(k) eps^-(l) beta~_{n-k-l}(x) x^k (x+y)^l,
/// fully expanded.
XYPoly translation_rhs(const BernoulliContext& ctx, int n);
XYPoly translation_rhs(int n);

/// Both members of B_n(x+y) = sum_l C(n,l) B_{n-l}(x) y^l with B_m the
/// lambda = 0 reduction of beta~_m.
std::pair<XYPoly, XYPoly> classical_shift_check(const BernoulliContext& ctx, int n);
std::pair<XYPoly, XYPoly> classical_shift_check(int n);

/// d/dx beta~_n from the closed sum
///   beta~'_{m+1} = (m+1)! sum_{k<=m} (-lambda x)^(m-k) / k! beta~_k.
XPoly beta_tilde_derivative_series(const BernoulliContext& ctx, int n);
XPoly beta_tilde_derivative_series(int n);

/// One step of the lambda-Appell construction:
///   P_n = P_n(0) + n int_0^x (P_{n-1}(u) - lambda u P'_{n-1}(u)) du.
XPoly lambda_appell_step(const XPoly& previous, const LambdaPoly& value_at_zero, int n);

/// beta~_n rebuilt from beta~_{n-1} and beta_n(lambda). Throws for n < 1.
XPoly lambda_appell_reconstruct(const BernoulliContext& ctx, int n);
XPoly lambda_appell_reconstruct(int n);

/// The lambda-Appell sequence with P_0 = 1 and P_n(0) = 0 for n >= 1, which
/// is eps^-(n) x^n.
std::vector<XPoly> lambda_appell_monomials(int max_n);

/// 1/(n+1) sum_{k<=n} C(n+1,k) eps^-(n+1-k) beta~_k, which equals eps^-(n) x^n.
XPoly xn_expansion_rhs(const BernoulliContext& ctx, int n);

/// lambda * x as an XPoly.
XPoly lambda_x();

}  // namespace tsb

#endif  // TSB_BERNOULLI_HPP
