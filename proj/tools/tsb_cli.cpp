// tsb: command-line front end for the deformed Bernoulli library.
//
// Exit codes: 0 success, 1 identity failure (verify), 2 usage or domain
// error, 3 internal route disagreement (compute --route all).

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsb/bernoulli.hpp"
#include "tsb/bivariate.hpp"
#include "tsb/numeric.hpp"
#include "tsb/routes.hpp"
#include "tsb/serialize.hpp"
#include "tsb/series.hpp"
#include "tsb/verify.hpp"

namespace {

using nlohmann::json;
using namespace tsb;

constexpr const char* kVersion = "1.0.0";

enum ExitCode { kOk = 0, kIdentityFailure = 1, kUsage = 2, kDisagreement = 3 };

enum class Format { Json, Csv, Latex, Text };

struct OutputOptions {
  std::string format = "json";
  bool no_meta = false;

  Format fmt() const {
    if (format == "csv") return Format::Csv;
    if (format == "latex") return Format::Latex;
    if (format == "text") return Format::Text;
    return Format::Json;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json make_document(const std::string& command, json parameters, json results, const OutputOptions& out) {
  json doc{{"schema_version", kSchemaVersion},
           {"command", command},
           {"parameters", std::move(parameters)},
           {"results", std::move(results)}};
  if (!out.no_meta) doc["meta"] = json{{"generator", "tsb"}, {"version", kVersion}, {"generated_at", utc_timestamp()}};
  return doc;
}

void print_header(const OutputOptions& out, const std::string& command) {
  if (out.no_meta) return;
  const char* lead = out.fmt() == Format::Latex ? "%" : "#";
  std::cout << lead << " tsb " << kVersion << " " << command << " generated_at " << utc_timestamp() << "\n";
}

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "latex", "text"}))
      ->capture_default_str();
  cmd->add_flag("--no-meta", out.no_meta, "Omit the metadata header (byte-reproducible output)");
}

Rational parse_rational_arg(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

// ---------------------------------------------------------------- compute

struct ComputeArgs {
  int n = -1;
  std::string route = "recurrence";
  std::string lambda;
  std::string x;
  OutputOptions out;
};

// The computed object after any requested substitutions.
struct Evaluated {
  std::string kind;  // "xpoly", "lambdapoly" or "value"
  XPoly poly;
  LambdaPoly lambda_poly;
  Rational value;

  json to_json_record() const {
    if (kind == "value") return json{{"kind", kind}, {"value", tsb::to_json(value)}};
    if (kind == "lambdapoly") return json{{"kind", kind}, {"poly", tsb::to_json(lambda_poly)}};
    return json{{"kind", kind}, {"poly", tsb::to_json(poly)}};
  }
  std::string text(Format f) const {
    const bool latex = f == Format::Latex;
    if (kind == "value") return latex ? to_latex(value) : value.to_string();
    if (kind == "lambdapoly") return latex ? to_latex(lambda_poly) : to_text(lambda_poly);
    return latex ? to_latex(poly) : to_text(poly);
  }
  friend bool operator==(const Evaluated& a, const Evaluated& b) {
    return a.kind == b.kind && a.poly == b.poly && a.lambda_poly == b.lambda_poly && a.value == b.value;
  }
};

Evaluated substitute(const XPoly& p, const std::optional<Rational>& lambda0, const std::optional<Rational>& x0) {
  Evaluated e;
  if (lambda0 && x0) {
    e.kind = "value";
    e.value = evaluate(p, *lambda0, *x0);
  } else if (x0) {
    e.kind = "lambdapoly";
    e.lambda_poly = substitute_x(p, *x0);
  } else if (lambda0) {
    e.kind = "xpoly";
    e.poly = embed(substitute_lambda(p, *lambda0));
  } else {
    e.kind = "xpoly";
    e.poly = p;
  }
  return e;
}

void csv_rows(const std::string& prefix, const Evaluated& e) {
  if (e.kind == "value") {
    std::cout << prefix << ",0,0," << e.value << "\n";
    return;
  }
  if (e.kind == "lambdapoly") {
    for (int i = 0; i <= e.lambda_poly.degree(); ++i) {
      if (!e.lambda_poly.coeff(i).is_zero()) std::cout << prefix << ",0," << i << "," << e.lambda_poly.coeff(i) << "\n";
    }
    return;
  }
  for (int k = 0; k <= e.poly.degree(); ++k) {
    const LambdaPoly c = e.poly.coeff(k);
    for (int i = 0; i <= c.degree(); ++i) {
      if (!c.coeff(i).is_zero()) std::cout << prefix << "," << k << "," << i << "," << c.coeff(i) << "\n";
    }
  }
}

int run_compute(const ComputeArgs& args) {
  require(args.n >= 0, "--n must be a non-negative integer");
  std::vector<Route> routes;
  if (args.route == "all") {
    routes = {Route::Recurrence, Route::Explicit, Route::Determinant, Route::Series};
  } else {
    try {
      routes = {parse_route(args.route)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  std::optional<Rational> lambda0;
  std::optional<Rational> x0;
  if (!args.lambda.empty()) lambda0 = parse_rational_arg(args.lambda, "--lambda");
  if (!args.x.empty()) x0 = parse_rational_arg(args.x, "--x");

  std::vector<std::pair<Route, Evaluated>> computed;
  for (Route r : routes) computed.emplace_back(r, substitute(compute_beta_tilde(args.n, r), lambda0, x0));
  bool agree = true;
  for (const auto& [r, e] : computed) agree = agree && e == computed.front().second;

  const Format f = args.out.fmt();
  if (f == Format::Json) {
    json params{{"n", args.n}, {"route", args.route}};
    if (lambda0) params["lambda"] = lambda0->to_string();
    if (x0) params["x"] = x0->to_string();
    json results = json::array();
    for (const auto& [r, e] : computed) {
      json rec = e.to_json_record();
      rec["route"] = std::string(route_name(r));
      rec["n"] = args.n;
      results.push_back(std::move(rec));
    }
    json doc = make_document("compute", std::move(params), std::move(results), args.out);
    if (args.route == "all") doc["agree"] = agree;
    std::cout << doc.dump(2) << "\n";
  } else if (f == Format::Csv) {
    std::cout << "route,n,xexp,lexp,coeff\n";
    for (const auto& [r, e] : computed) csv_rows(std::string(route_name(r)) + "," + std::to_string(args.n), e);
  } else {
    print_header(args.out, "compute");
    for (const auto& [r, e] : computed) {
      if (computed.size() > 1) std::cout << route_name(r) << ": ";
      std::cout << e.text(f) << "\n";
    }
    if (computed.size() > 1) std::cout << "agree: " << (agree ? "true" : "false") << "\n";
  }
  if (!agree) {
    std::cerr << "error: routes disagree for n=" << args.n << "\n";
    return kDisagreement;
  }
  return kOk;
}

// ---------------------------------------------------------------- numbers

int run_numbers(int max_n, const OutputOptions& out) {
  require(max_n >= 0, "--max-n must be a non-negative integer");
  const auto numbers = degenerate_bernoulli_numbers(max_n);
  const Format f = out.fmt();
  if (f == Format::Json) {
    json results = json::array();
    for (int n = 0; n <= max_n; ++n) results.push_back(json{{"n", n}, {"beta", tsb::to_json(numbers[n])}});
    std::cout << make_document("numbers", json{{"max_n", max_n}}, std::move(results), out).dump(2) << "\n";
  } else if (f == Format::Csv) {
    std::cout << "n,lexp,coeff\n";
    for (int n = 0; n <= max_n; ++n) {
      for (int i = 0; i <= numbers[n].degree(); ++i) {
        if (!numbers[n].coeff(i).is_zero()) std::cout << n << "," << i << "," << numbers[n].coeff(i) << "\n";
      }
    }
  } else {
    print_header(out, "numbers");
    for (int n = 0; n <= max_n; ++n) {
      if (f == Format::Latex) {
        std::cout << "\\beta_{" << n << "}(\\lambda) = " << to_latex(numbers[n]) << "\n";
      } else {
        std::cout << "beta_" << n << " = " << to_text(numbers[n]) << "\n";
      }
    }
  }
  return kOk;
}

// -------------------------------------------------------------- bivariate

int run_bivariate(int n, int r, const std::string& route_text, const OutputOptions& out) {
  require(n >= 0, "--n must be a non-negative integer");
  require(r >= 1 && r <= 8, "--r must be in 1..8");
  BivariateRoute route;
  try {
    route = parse_bivariate_route(route_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const XYPoly p = beta_r_family(n, r, route).polys.back();
  const Format f = out.fmt();
  if (f == Format::Json) {
    json results = json::array({json{{"n", n}, {"r", r}, {"route", route_text}, {"poly", tsb::to_json(p)}}});
    std::cout << make_document("bivariate", json{{"n", n}, {"r", r}, {"route", route_text}}, std::move(results), out)
                     .dump(2)
              << "\n";
  } else if (f == Format::Csv) {
    std::cout << "xexp,yexp,lexp,coeff\n";
    for (const auto& [key, c] : p.terms()) {
      for (int i = 0; i <= c.degree(); ++i) {
        if (!c.coeff(i).is_zero()) std::cout << key.first << "," << key.second << "," << i << "," << c.coeff(i) << "\n";
      }
    }
  } else {
    print_header(out, "bivariate");
    std::cout << (f == Format::Latex ? to_latex(p) : to_text(p)) << "\n";
  }
  return kOk;
}

// ----------------------------------------------------------------- series

int run_series(int order, const OutputOptions& out) {
  require(order >= 0, "--order must be a non-negative integer");
  const XSeries s = beta_generating_series(order);
  const Format f = out.fmt();
  if (f == Format::Json) {
    json results = json::array();
    for (int k = 0; k <= order; ++k) results.push_back(json{{"k", k}, {"coeff", tsb::to_json(s[k])}});
    std::cout << make_document("series", json{{"order", order}}, std::move(results), out).dump(2) << "\n";
  } else if (f == Format::Csv) {
    std::cout << "k,xexp,lexp,coeff\n";
    for (int k = 0; k <= order; ++k) {
      for (int j = 0; j <= s[k].degree(); ++j) {
        const LambdaPoly c = s[k].coeff(j);
        for (int i = 0; i <= c.degree(); ++i) {
          if (!c.coeff(i).is_zero()) std::cout << k << "," << j << "," << i << "," << c.coeff(i) << "\n";
        }
      }
    }
  } else {
    print_header(out, "series");
    for (int k = 0; k <= order; ++k) {
      if (f == Format::Latex) {
        std::cout << "[t^{" << k << "}]: " << to_latex(s[k]) << "\n";
      } else {
        std::cout << "[t^" << k << "] " << to_text(s[k]) << "\n";
      }
    }
  }
  return kOk;
}

// ----------------------------------------------------------------- verify

int run_verify(const std::string& suite_text, int max_n, const OutputOptions& out) {
  require(max_n >= 0, "--max-n must be a non-negative integer");
  Suite suite;
  try {
    suite = parse_suite(suite_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto results = run_suite(suite, max_n);
  bool all_passed = true;
  for (const auto& r : results) all_passed = all_passed && r.passed;

  if (out.fmt() == Format::Json) {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back(json{{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    json doc = make_document("verify", json{{"suite", suite_text}, {"max_n", max_n}}, std::move(rows), out);
    doc["all_passed"] = all_passed;
    std::cout << doc.dump(2) << "\n";
  } else {
    print_header(out, "verify");
    std::size_t failed = 0;
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.suite << "  " << r.name;
      if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
      std::cout << "\n";
      failed += r.passed ? 0 : 1;
    }
    std::cout << results.size() - failed << "/" << results.size() << " identities hold (max_n=" << max_n << ")\n";
  }
  return all_passed ? kOk : kIdentityFailure;
}

// ------------------------------------------------------------------- eval

struct EvalArgs {
  std::string kind;
  double x = 0.0;
  double lambda = 0.0;
  double t = 1.0;
  int terms = 60;
  OutputOptions out;
};

std::string format_double(double v) {
  // Shortest repr that round-trips, matching the JSON emitter.
  return json(v).dump();
}

int run_eval(const EvalArgs& args) {
  json params{{"kind", args.kind}, {"x", args.x}, {"lambda", args.lambda}};
  if (args.kind == "product") {
    params["t"] = args.t;
    params["terms"] = args.terms;
  }
  const Format f = args.out.fmt();
  double value = 0.0;
  try {
    if (args.kind == "explambda") {
      value = exp_lambda(args.x, args.lambda);
    } else if (args.kind == "loglambda") {
      value = log_lambda(args.x, args.lambda);
    } else {
      value = product_form_exp(args.t, args.x, args.lambda, args.terms);
    }
  } catch (const std::exception& e) {
    const bool overflow = dynamic_cast<const NumericOverflowError*>(&e) != nullptr;
    json err{{"kind", overflow ? "overflow" : "domain"}, {"message", e.what()}};
    if (f == Format::Json) {
      json doc = make_document("eval", std::move(params), json::array(), args.out);
      doc["error"] = std::move(err);
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "error," << err["kind"].get<std::string>() << "," << e.what() << "\n";
    }
    return kUsage;
  }
  if (f == Format::Json) {
    json results = json::array({json{{"kind", args.kind}, {"value", value}}});
    std::cout << make_document("eval", std::move(params), std::move(results), args.out).dump(2) << "\n";
  } else if (f == Format::Csv) {
    std::cout << "kind,value\n" << args.kind << "," << format_double(value) << "\n";
  } else {
    std::cout << format_double(value) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed (Tsallis) Bernoulli polynomials in exact arithmetic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "beta~_n(lambda|x) by one route or all of them");
  compute_cmd->add_option("--n", compute.n, "Degree")->required();
  compute_cmd->add_option("--route", compute.route, "recurrence|explicit|determinant|series|all")
      ->capture_default_str();
  compute_cmd->add_option("--lambda", compute.lambda, "Substitute lambda (exact p/q)");
  compute_cmd->add_option("--x", compute.x, "Substitute x (exact p/q)");
  add_output_flags(compute_cmd, compute.out);

  int numbers_max_n = -1;
  OutputOptions numbers_out;
  auto* numbers_cmd = app.add_subcommand("numbers", "Degenerate Bernoulli numbers beta_n(lambda)");
  numbers_cmd->add_option("--max-n", numbers_max_n, "Largest n")->required();
  add_output_flags(numbers_cmd, numbers_out);

  int biv_n = -1;
  int biv_r = 1;
  std::string biv_route = "recurrence";
  OutputOptions biv_out;
  auto* biv_cmd = app.add_subcommand("bivariate", "Two-variable polynomials beta~^(r)_n(lambda|x,y)");
  biv_cmd->add_option("--n", biv_n, "Degree")->required();
  biv_cmd->add_option("--r", biv_r, "Power of t attached to y (1..8)")->required();
  biv_cmd->add_option("--route", biv_route, "recurrence|double-sum|connection|series")->capture_default_str();
  add_output_flags(biv_cmd, biv_out);

  std::string suite = "all";
  int verify_max_n = 10;
  OutputOptions verify_out;
  verify_out.format = "text";
  auto* verify_cmd = app.add_subcommand("verify", "Check the identity suites");
  verify_cmd->add_option("--suite", suite,
                         "all|routes|translation|appell|determinant|bivariate|classical|numeric|xnexpansion")
      ->capture_default_str();
  verify_cmd->add_option("--max-n", verify_max_n, "Largest n checked")->capture_default_str();
  add_output_flags(verify_cmd, verify_out);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Double-precision exp_lambda, log_lambda and product form");
  eval_cmd->add_option("kind", eval.kind, "explambda|loglambda|product")
      ->required()
      ->check(CLI::IsMember({"explambda", "loglambda", "product"}));
  eval_cmd->add_option("--x", eval.x, "Argument X (or x for product)")->required();
  eval_cmd->add_option("--lambda", eval.lambda, "Deformation parameter")->required();
  eval_cmd->add_option("--t", eval.t, "t for the product form")->capture_default_str();
  eval_cmd->add_option("--terms", eval.terms, "Truncation length L for the product form")->capture_default_str();
  add_output_flags(eval_cmd, eval.out);

  int series_order = -1;
  OutputOptions series_out;
  auto* series_cmd = app.add_subcommand("series", "Coefficients of t exp_lambda(tx)/(exp_lambda(t)-1)");
  series_cmd->add_option("--order", series_order, "Truncation order")->required();
  add_output_flags(series_cmd, series_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*compute_cmd) return run_compute(compute);
    if (*numbers_cmd) return run_numbers(numbers_max_n, numbers_out);
    if (*biv_cmd) return run_bivariate(biv_n, biv_r, biv_route, biv_out);
    if (*verify_cmd) return run_verify(suite, verify_max_n, verify_out);
    if (*eval_cmd) return run_eval(eval);
    if (*series_cmd) return run_series(series_order, series_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
