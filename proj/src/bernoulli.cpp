#include "tsb/bernoulli.hpp"

#include <stdexcept>
#include <string>

#include "tsb/series.hpp"

namespace tsb {

namespace {

void require_non_negative(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": n must be non-negative");
}

const XPoly& at(const std::vector<XPoly>& v, int n) { return v[static_cast<std::size_t>(n)]; }

}  // namespace

std::string_view route_name(Route route) {
  switch (route) {
    case Route::Recurrence:
      return "recurrence";
    case Route::Explicit:
      return "explicit";
    case Route::Determinant:
      return "determinant";
    case Route::Series:
      return "series";
  }
  return "unknown";
}

Route parse_route(std::string_view name) {
  for (Route r : {Route::Recurrence, Route::Explicit, Route::Determinant, Route::Series}) {
    if (route_name(r) == name) return r;
  }
  throw std::invalid_argument("unknown route '" + std::string(name) + "'");
}

XPoly lambda_x() { return XPoly::monomial(1, LambdaPoly::var()); }

std::vector<LambdaPoly> degenerate_bernoulli_numbers(int max_n) {
  require_non_negative(max_n, "degenerate_bernoulli_numbers");
  const EpsilonTable eps(max_n + 1);
  const PascalTriangle binom(max_n + 1);
  std::vector<LambdaPoly> numbers;
  numbers.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    LambdaPoly sum;
    for (int k = 0; k < n; ++k) {
      sum += eps.minus(n + 1 - k) * numbers[static_cast<std::size_t>(k)] * binom(n + 1, k);
    }
    // 0^n is 1 only for n = 0
    LambdaPoly value = n == 0 ? LambdaPoly::one() : LambdaPoly();
    numbers.push_back(value - sum.scaled(Rational(1, n + 1)));
  }
  return numbers;
}

std::vector<XPoly> beta_tilde_recurrence_family(int max_n) {
  require_non_negative(max_n, "beta_tilde_recurrence");
  const EpsilonTable eps(max_n + 1);
  const PascalTriangle binom(max_n + 1);
  std::vector<XPoly> polys;
  polys.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    XPoly sum;
    for (int k = 0; k < n; ++k) {
      sum += at(polys, k) * eps.minus(n + 1 - k).scaled(binom(n + 1, k));
    }
    polys.push_back(XPoly::monomial(n, eps.minus(n)) - sum.scaled(Rational(1, n + 1)));
  }
  return polys;
}

XPoly beta_tilde_recurrence(int n) { return beta_tilde_recurrence_family(n).back(); }

BernoulliContext::BernoulliContext(int max_n)
    : max_n_(max_n),
      eps_(max_n < 0 ? 0 : max_n + 1),
      binom_(max_n < 0 ? 0 : max_n + 1),
      numbers_(degenerate_bernoulli_numbers(max_n)),
      polys_(beta_tilde_recurrence_family(max_n)) {}

std::vector<XPoly> beta_tilde_explicit_family(int max_n) {
  require_non_negative(max_n, "beta_tilde_explicit");
  const auto numbers = degenerate_bernoulli_numbers(max_n);
  const EpsilonTable eps(max_n);
  const PascalTriangle binom(max_n);
  std::vector<XPoly> polys;
  polys.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    std::vector<LambdaPoly> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      coeffs.push_back((eps.minus(k) * numbers[static_cast<std::size_t>(n - k)]).scaled(binom(n, k)));
    }
    polys.emplace_back(std::move(coeffs));
  }
  return polys;
}

XPoly beta_tilde_explicit(int n) { return beta_tilde_explicit_family(n).back(); }

std::vector<XPoly> beta_tilde_series_family(int max_n) {
  require_non_negative(max_n, "beta_tilde_series");
  const XSeries gen = beta_generating_series(max_n);
  std::vector<XPoly> polys;
  polys.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) polys.push_back(gen[n].scaled(factorial(n)));
  return polys;
}

XPoly beta_tilde_series(int n) { return beta_tilde_series_family(n).back(); }

XYPoly translation_rhs(const BernoulliContext& ctx, int n) {
  require_non_negative(n, "translation_rhs");
  const auto& eps = ctx.eps();
  const auto& binom = ctx.binom();
  const XYPoly x_plus_y = XYPoly::x() + XYPoly::y();

  std::vector<XYPoly> shifted_powers{XYPoly::one()};
  std::vector<XYPoly> x_powers{XYPoly::one()};
  for (int i = 1; i <= n; ++i) {
    shifted_powers.push_back(shifted_powers.back() * x_plus_y);
    x_powers.push_back(x_powers.back() * XYPoly::x());
  }

  XYPoly total;
  for (int k = 0; k <= n; ++k) {
    for (int l = 0; k + l <= n; ++l) {
      const Rational multinomial = binom(n, k) * binom(n - k, l);
      const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
      const LambdaPoly c = (eps.plus(k) * eps.minus(l)).scaled(sign * multinomial);
      total += XYPoly(ctx.poly(n - k - l)) * x_powers[static_cast<std::size_t>(k)] *
               shifted_powers[static_cast<std::size_t>(l)] * c;
    }
  }
  return total;
}

XYPoly translation_rhs(int n) {
  require_non_negative(n, "translation_rhs");
  return translation_rhs(BernoulliContext(n), n);
}

std::pair<XYPoly, XYPoly> classical_shift_check(const BernoulliContext& ctx, int n) {
  require_non_negative(n, "classical_shift_check");
  auto classical = [&](int m) { return embed(substitute_lambda(ctx.poly(m), Rational(0))); };
  XYPoly lhs = shift_x(classical(n));
  XYPoly rhs;
  XYPoly y_power = XYPoly::one();
  for (int l = 0; l <= n; ++l) {
    rhs += (XYPoly(classical(n - l)) * y_power).scaled(ctx.binom()(n, l));
    y_power *= XYPoly::y();
  }
  return {std::move(lhs), std::move(rhs)};
}

std::pair<XYPoly, XYPoly> classical_shift_check(int n) {
  require_non_negative(n, "classical_shift_check");
  return classical_shift_check(BernoulliContext(n), n);
}

XPoly beta_tilde_derivative_series(const BernoulliContext& ctx, int n) {
  require_non_negative(n, "beta_tilde_derivative_series");
  if (n == 0) return {};
  const int m = n - 1;
  const XPoly minus_lambda_x = -lambda_x();
  XPoly total;
  XPoly power = XPoly::one();  // (-lambda x)^(m-k), built from k = m downward
  for (int k = m; k >= 0; --k) {
    total += (power * ctx.poly(k)).scaled(Rational(1) / factorial(k));
    power *= minus_lambda_x;
  }
  return total.scaled(factorial(n));
}

XPoly beta_tilde_derivative_series(int n) {
  require_non_negative(n, "beta_tilde_derivative_series");
  return beta_tilde_derivative_series(BernoulliContext(n), n);
}

XPoly lambda_appell_step(const XPoly& previous, const LambdaPoly& value_at_zero, int n) {
  const XPoly integrand = previous - lambda_x() * derivative(previous);
  return XPoly(value_at_zero) + antiderivative(integrand).scaled(Rational(n));
}

XPoly lambda_appell_reconstruct(const BernoulliContext& ctx, int n) {
  if (n < 1) throw std::invalid_argument("lambda_appell_reconstruct: n must be >= 1");
  return lambda_appell_step(ctx.poly(n - 1), ctx.numbers()[static_cast<std::size_t>(n)], n);
}

XPoly lambda_appell_reconstruct(int n) {
  if (n < 1) throw std::invalid_argument("lambda_appell_reconstruct: n must be >= 1");
  return lambda_appell_reconstruct(BernoulliContext(n), n);
}

std::vector<XPoly> lambda_appell_monomials(int max_n) {
  require_non_negative(max_n, "lambda_appell_monomials");
  std::vector<XPoly> seq{XPoly::one()};
  for (int n = 1; n <= max_n; ++n) seq.push_back(lambda_appell_step(seq.back(), LambdaPoly(), n));
  return seq;
}

XPoly xn_expansion_rhs(const BernoulliContext& ctx, int n) {
  require_non_negative(n, "xn_expansion_rhs");
  XPoly sum;
  for (int k = 0; k <= n; ++k) {
    sum += ctx.poly(k) * ctx.eps().minus(n + 1 - k).scaled(ctx.binom()(n + 1, k));
  }
  return sum.scaled(Rational(1, n + 1));
}

}  // namespace tsb
