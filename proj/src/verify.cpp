#include "tsb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "tsb/bernoulli.hpp"
#include "tsb/bivariate.hpp"
#include "tsb/hessenberg.hpp"
#include "tsb/numeric.hpp"
#include "tsb/series.hpp"

namespace tsb {

namespace {

constexpr int kDeterminantCap = 12;

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  /// Records one identity checked for n in [from, to].
  void for_each_n(const std::string& name, int from, int to, const std::function<bool(int)>& holds) {
    CheckResult r{suite_, name, true, ""};
    for (int n = from; n <= to; ++n) {
      if (!holds(n)) {
        r.passed = false;
        r.detail = "fails at n=" + std::to_string(n);
        break;
      }
    }
    results_.push_back(std::move(r));
  }

  void single(const std::string& name, bool passed, std::string detail = {}) {
    results_.push_back(CheckResult{suite_, name, passed, passed ? "" : std::move(detail)});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

XPoly falling_factorial_power_expansion(int x0, int n) {
  // (1/lambda)((1 + lambda t)^x0 - 1): coefficient of t^n is C(x0, n) lambda^(n-1).
  Rational c(1);
  for (int j = 0; j < n; ++j) c = c * Rational(x0 - j) / Rational(j + 1);
  return XPoly(LambdaPoly::monomial(n - 1, c));
}

std::vector<CheckResult> routes_suite(int max_n) {
  Recorder rec("routes");
  const BernoulliContext ctx(max_n);
  const auto explicit_route = beta_tilde_explicit_family(max_n);
  const auto series_route = beta_tilde_series_family(max_n);
  const int det_max = std::min(max_n, kDeterminantCap);
  const auto det_route = beta_tilde_determinant_family(det_max);
  auto at = [](const auto& v, int n) -> const auto& { return v[static_cast<std::size_t>(n)]; };

  rec.for_each_n("recurrence = explicit", 0, max_n,
                 [&](int n) { return ctx.poly(n) == at(explicit_route, n); });
  rec.for_each_n("recurrence = series", 0, max_n,
                 [&](int n) { return ctx.poly(n) == at(series_route, n); });
  rec.for_each_n("recurrence = determinant (n<=12)", 0, det_max,
                 [&](int n) { return ctx.poly(n) == at(det_route, n); });
  rec.for_each_n("boundary beta~_n(lambda|0) = beta_n(lambda)", 0, max_n,
                 [&](int n) { return substitute_x(ctx.poly(n), Rational(0)) == at(ctx.numbers(), n); });
  rec.for_each_n("x-degree n, leading eps^-(n), lambda-degree <= n", 0, max_n, [&](int n) {
    const XPoly& p = ctx.poly(n);
    if (p.degree() != n || p.leading() != ctx.eps().minus(n)) return false;
    return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                       [n](const LambdaPoly& c) { return c.degree() <= n; });
  });
  const XSeries carlitz = degenerate_numbers_series(max_n);
  rec.for_each_n("numbers = n! [t^n] t/(exp_lambda(t)-1)", 0, max_n, [&](int n) {
    return XPoly(at(ctx.numbers(), n)) == carlitz[n].scaled(factorial(n));
  });
  const int ff_order = std::max(1, std::min(max_n, 8));
  const XSeries logs = log_expx_series(ff_order);
  rec.for_each_n("log_lambda((exp_lambda t)^x) falling-factorial expansion", 0, 5, [&](int x0) {
    for (int n = 1; n <= ff_order; ++n) {
      const LambdaPoly lhs = substitute_x(logs[n], Rational(x0));
      if (XPoly(lhs) != falling_factorial_power_expansion(x0, n)) return false;
    }
    return true;
  });
  return rec.take();
}

std::vector<CheckResult> translation_suite(int max_n) {
  Recorder rec("translation");
  const BernoulliContext ctx(max_n);
  std::vector<XYPoly> rhs;
  for (int n = 0; n <= max_n; ++n) rhs.push_back(translation_rhs(ctx, n));
  const auto explicit_route = beta_tilde_explicit_family(max_n);
  rec.for_each_n("beta~_n(lambda|x+y) = translation sum", 0, max_n,
                 [&](int n) { return shift_x(ctx.poly(n)) == rhs[static_cast<std::size_t>(n)]; });
  rec.for_each_n("contraction x->0, y->x gives explicit expansion", 0, max_n, [&](int n) {
    return contract(rhs[static_cast<std::size_t>(n)]) == explicit_route[static_cast<std::size_t>(n)];
  });
  rec.for_each_n("lambda=0 limit: B_n(x+y) = sum C(n,l) B_{n-l}(x) y^l", 0, max_n, [&](int n) {
    const auto [lhs, r] = classical_shift_check(ctx, n);
    return lhs == r && substitute_lambda(rhs[static_cast<std::size_t>(n)], Rational(0)) == lhs;
  });
  return rec.take();
}

std::vector<CheckResult> appell_suite(int max_n) {
  Recorder rec("appell");
  const BernoulliContext ctx(max_n);
  rec.for_each_n("beta~'_n = n(beta~_{n-1} - lambda x beta~'_{n-1})", 1, max_n, [&](int n) {
    const XPoly& prev = ctx.poly(n - 1);
    return derivative(ctx.poly(n)) == (prev - lambda_x() * derivative(prev)).scaled(Rational(n));
  });
  rec.for_each_n("closed derivative sum = d/dx beta~_n", 0, max_n,
                 [&](int n) { return beta_tilde_derivative_series(ctx, n) == derivative(ctx.poly(n)); });
  rec.for_each_n("integral reconstruction = beta~_n", 1, max_n,
                 [&](int n) { return lambda_appell_reconstruct(ctx, n) == ctx.poly(n); });
  const auto monomials = lambda_appell_monomials(max_n);
  rec.for_each_n("P_n(0)=0 family is eps^-(n) x^n", 0, max_n, [&](int n) {
    return monomials[static_cast<std::size_t>(n)] == XPoly::monomial(n, ctx.eps().minus(n));
  });
  return rec.take();
}

std::vector<CheckResult> determinant_suite(int max_n) {
  Recorder rec("determinant");
  const int cap = std::min(max_n, kDeterminantCap);
  const BernoulliContext ctx(cap);
  const auto det = beta_tilde_determinant_family(cap);
  const auto classical = classical_bernoulli_polynomials(cap);
  rec.for_each_n("determinant = recurrence (n<=12)", 0, cap,
                 [&](int n) { return det[static_cast<std::size_t>(n)] == ctx.poly(n); });
  rec.for_each_n("determinant at lambda=0 = B_n(x) (n<=12)", 0, cap, [&](int n) {
    return substitute_lambda(det[static_cast<std::size_t>(n)], Rational(0)) ==
           classical[static_cast<std::size_t>(n)];
  });
  return rec.take();
}

std::vector<CheckResult> bivariate_suite(int max_n) {
  Recorder rec("bivariate");
  const auto single = beta_tilde_recurrence_family(max_n);
  for (int r = 1; r <= 3; ++r) {
    const std::string tag = " (r=" + std::to_string(r) + ")";
    const auto recur = beta_r_family(max_n, r, BivariateRoute::Recurrence);
    const auto dsum = beta_r_family(max_n, r, BivariateRoute::DoubleSum);
    const auto conn = beta_r_family(max_n, r, BivariateRoute::Connection);
    const auto series = beta_r_family(max_n, r, BivariateRoute::Series);
    auto at = [](const BivariateFamily& f, int n) -> const XYPoly& {
      return f.polys[static_cast<std::size_t>(n)];
    };
    rec.for_each_n("recurrence = double sum = connection" + tag, 0, max_n,
                   [&](int n) { return at(recur, n) == at(dsum, n) && at(dsum, n) == at(conn, n); });
    rec.for_each_n("generating-function oracle" + tag, 0, max_n,
                   [&](int n) { return at(series, n) == at(recur, n); });
    rec.for_each_n("y=0 reduction" + tag, 0, max_n, [&](int n) {
      const XPoly& expected = single[static_cast<std::size_t>(n)];
      return at_y_zero(at(recur, n)) == expected && at_y_zero(at(dsum, n)) == expected &&
             at_y_zero(at(conn, n)) == expected;
    });
    rec.for_each_n("no y-dependence for n < r" + tag, 0, std::min(max_n, r - 1),
                   [&](int n) { return at(recur, n).y_degree() <= 0; });
    rec.for_each_n("d/dx identity" + tag, 1, max_n, [&](int n) {
      const auto [lhs, rhs] = partial_x_check(recur, n);
      return lhs == rhs;
    });
    rec.for_each_n("d/dy identity" + tag, r, max_n, [&](int n) {
      const auto [lhs, rhs] = partial_y_check(recur, n);
      return lhs == rhs;
    });
  }
  return rec.take();
}

std::vector<CheckResult> classical_suite(int max_n) {
  Recorder rec("classical");
  const BernoulliContext ctx(max_n);
  const auto classical = classical_bernoulli_polynomials(max_n);
  rec.for_each_n("beta~_n at lambda=0 = B_n(x)", 0, max_n, [&](int n) {
    return substitute_lambda(ctx.poly(n), Rational(0)) == classical[static_cast<std::size_t>(n)];
  });
  const std::vector<std::pair<int, Rational>> known{
      {2, Rational(1, 6)}, {4, Rational(-1, 30)}, {6, Rational(1, 42)}, {8, Rational(-1, 30)}, {10, Rational(5, 66)}};
  bool ok = true;
  std::string detail;
  for (const auto& [n, value] : known) {
    if (n > max_n) break;
    if (evaluate(ctx.poly(n), Rational(0), Rational(0)) != value) {
      ok = false;
      detail = "B_" + std::to_string(n);
      break;
    }
  }
  rec.single("B_2, B_4, ..., B_10 constant terms", ok, detail);
  return rec.take();
}

std::vector<CheckResult> numeric_suite(int max_n) {
  Recorder rec("numeric");
  std::mt19937_64 rng(20240531);

  {
    std::uniform_real_distribution<double> lam(-0.9, 0.9);
    std::uniform_real_distribution<double> xs(-3.0, 3.0);
    int accepted = 0;
    bool ok = true;
    std::string detail;
    while (accepted < 200) {
      const double l = lam(rng);
      const double x = xs(rng);
      if (1.0 + l * x <= 0.05) continue;
      ++accepted;
      const double back = log_lambda(exp_lambda(x, l), l);
      if (std::abs(back - x) > 1e-10 * std::max(1.0, std::abs(x))) {
        ok = false;
        detail = "X=" + std::to_string(x) + " lambda=" + std::to_string(l);
        break;
      }
    }
    rec.single("log_lambda(exp_lambda(X)) = X on 200 points", ok, detail);
  }
  {
    bool ok = true;
    for (double x = -3.0; x <= 3.0 && ok; x += 0.25) {
      for (double l : {1e-7, -1e-7}) {
        if (std::abs(exp_lambda(x, l) - std::exp(x)) > 1e-5 * std::exp(x)) ok = false;
      }
    }
    rec.single("continuity at lambda=0 (|lambda|=1e-7)", ok, "relative error above 1e-5");
  }
  {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      const double t = unit(rng);
      const double x = 2.0 * unit(rng);
      double l = unit(rng);
      if (std::abs(l * t * x) > 0.5) l *= 0.5 / std::abs(l * t * x);
      const double closed = exp_lambda(t * x, l);
      const double prod = product_form_exp(t, x, l, 60);
      if (std::abs(prod - closed) > 1e-10 * std::abs(closed)) ok = false;
    }
    rec.single("product form (L=60) = exp_lambda for |lambda t x| <= 1/2", ok, "relative error above 1e-10");
  }
  {
    const BernoulliContext ctx(max_n);
    const std::vector<std::pair<Rational, Rational>> points{
        {Rational(1, 3), Rational(1, 2)}, {Rational(-1, 2), Rational(3, 5)}, {Rational(2, 7), Rational(-2, 3)}};
    rec.for_each_n("exact vs double Horner evaluation (relative to |p|(|lambda|,|x|))", 0, max_n, [&](int n) {
      for (const auto& [l0, x0] : points) {
        const double exact = evaluate(ctx.poly(n), l0, x0).to_double();
        const double approx = evaluate_double(ctx.poly(n), l0.to_double(), x0.to_double());
        const double scale = evaluation_magnitude(ctx.poly(n), l0.to_double(), x0.to_double());
        if (std::abs(exact - approx) > 1e-12 * scale) return false;
      }
      return true;
    });
  }
  return rec.take();
}

std::vector<CheckResult> xn_suite(int max_n) {
  Recorder rec("xnexpansion");
  const BernoulliContext ctx(max_n);
  rec.for_each_n("eps^-(n) x^n = 1/(n+1) sum C(n+1,k) eps^-(n+1-k) beta~_k", 0, max_n,
                 [&](int n) { return xn_expansion_rhs(ctx, n) == XPoly::monomial(n, ctx.eps().minus(n)); });
  return rec.take();
}

}  // namespace

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::All:
      return "all";
    case Suite::Routes:
      return "routes";
    case Suite::Translation:
      return "translation";
    case Suite::Appell:
      return "appell";
    case Suite::Determinant:
      return "determinant";
    case Suite::Bivariate:
      return "bivariate";
    case Suite::Classical:
      return "classical";
    case Suite::Numeric:
      return "numeric";
    case Suite::XnExpansion:
      return "xnexpansion";
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  for (auto s : {Suite::All, Suite::Routes, Suite::Translation, Suite::Appell, Suite::Determinant,
                 Suite::Bivariate, Suite::Classical, Suite::Numeric, Suite::XnExpansion}) {
    if (suite_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<CheckResult> run_suite(Suite suite, int max_n) {
  if (max_n < 0) throw std::invalid_argument("run_suite: max_n must be non-negative");
  switch (suite) {
    case Suite::Routes:
      return routes_suite(max_n);
    case Suite::Translation:
      return translation_suite(max_n);
    case Suite::Appell:
      return appell_suite(max_n);
    case Suite::Determinant:
      return determinant_suite(max_n);
    case Suite::Bivariate:
      return bivariate_suite(max_n);
    case Suite::Classical:
      return classical_suite(max_n);
    case Suite::Numeric:
      return numeric_suite(max_n);
    case Suite::XnExpansion:
      return xn_suite(max_n);
    case Suite::All:
      break;
  }
  std::vector<CheckResult> all;
  for (auto s : {Suite::Routes, Suite::Translation, Suite::Appell, Suite::Determinant, Suite::Bivariate,
                 Suite::Classical, Suite::Numeric, Suite::XnExpansion}) {
    auto part = run_suite(s, max_n);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

std::vector<QXPoly> classical_bernoulli_polynomials(int max_n) {
  if (max_n < 0) throw std::invalid_argument("classical_bernoulli_polynomials: max_n must be non-negative");
  TruncSeries<QXPoly> numerator(max_n);
  TruncSeries<QXPoly> denominator(max_n);
  for (int n = 0; n <= max_n; ++n) {
    numerator.set(n, QXPoly::monomial(n, Rational(1) / factorial(n)));
    denominator.set(n, QXPoly(Rational(1) / factorial(n + 1)));
  }
  const auto quotient = series_div(numerator, denominator);
  std::vector<QXPoly> polys;
  for (int n = 0; n <= max_n; ++n) polys.push_back(quotient[n].scaled(factorial(n)));
  return polys;
}

}  // namespace tsb
