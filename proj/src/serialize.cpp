#include "tsb/serialize.hpp"

#include <stdexcept>
#include <vector>

namespace tsb {

using nlohmann::json;

nlohmann::json to_json(const Rational& r) { return r.to_string(); }

nlohmann::json to_json(const LambdaPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
  return arr;
}

nlohmann::json to_json(const XPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return json{{"var", "x"}, {"coeffs", std::move(coeffs)}};
}

nlohmann::json to_json(const XYPoly& p) {
  json arr = json::array();
  for (const auto& [key, c] : p.terms()) {
    arr.push_back(json{{"xexp", key.first}, {"yexp", key.second}, {"coeff", to_json(c)}});
  }
  return arr;
}

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a JSON string");
  return Rational::parse(j.get<std::string>());
}

LambdaPoly lambda_poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("lambda polynomial must be a JSON array");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return LambdaPoly(std::move(coeffs));
}

XPoly xpoly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("var") || !j.contains("coeffs") || j.at("var") != "x" ||
      !j.at("coeffs").is_array()) {
    throw std::invalid_argument("x polynomial must be {\"var\":\"x\",\"coeffs\":[...]}");
  }
  std::vector<LambdaPoly> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(lambda_poly_from_json(c));
  return XPoly(std::move(coeffs));
}

XYPoly xypoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("xy polynomial must be a JSON array");
  XYPoly p;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("xexp") || !term.contains("yexp") ||
        !term.contains("coeff") || !term.at("xexp").is_number_integer() ||
        !term.at("yexp").is_number_integer()) {
      throw std::invalid_argument("malformed xy polynomial term");
    }
    const int xexp = term.at("xexp").get<int>();
    const int yexp = term.at("yexp").get<int>();
    if (xexp < 0 || yexp < 0) throw std::invalid_argument("negative exponent in xy polynomial");
    p.add_term(xexp, yexp, lambda_poly_from_json(term.at("coeff")));
  }
  return p;
}

namespace {

enum class Style { Text, Latex };

std::string power(const char* var, int e, Style style) {
  if (e == 0) return "";
  std::string name = style == Style::Latex && std::string(var) == "lambda" ? "\\lambda" : var;
  if (e == 1) return name;
  if (style == Style::Latex) return name + "^{" + std::to_string(e) + "}";
  return name + "^" + std::to_string(e);
}

std::string join_vars(const std::vector<std::string>& parts, Style style) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += style == Style::Latex ? " " : "*";
    out += p;
  }
  return out;
}

std::string magnitude(const Rational& r, Style style) {
  const Rational a = r.sign() < 0 ? -r : r;
  return style == Style::Latex ? to_latex(a) : a.to_string();
}

// One summand: a sign, an optional numeric factor, and a variable part.
struct Term {
  bool negative = false;
  std::string factor;  // empty means 1
  std::string vars;
};

Term scalar_term(const Rational& c, std::string vars, Style style) {
  Term t;
  t.negative = c.sign() < 0;
  const bool unit = c == Rational(1) || c == Rational(-1);
  if (!unit || vars.empty()) t.factor = magnitude(c, style);
  t.vars = std::move(vars);
  return t;
}

std::string render(const std::vector<Term>& terms, Style style) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    if (i == 0) {
      if (t.negative) out += "-";
    } else {
      out += t.negative ? " - " : " + ";
    }
    std::string body = t.factor;
    if (!t.vars.empty()) {
      if (!body.empty()) body += style == Style::Latex ? " " : "*";
      body += t.vars;
    }
    out += body;
  }
  return out;
}

// Terms of c * (var part), one per lambda power, descending.
void append_expanded(std::vector<Term>& out, const LambdaPoly& c, const std::string& xy_vars, Style style) {
  for (int i = c.degree(); i >= 0; --i) {
    if (c.coeff(i).is_zero()) continue;
    out.push_back(scalar_term(c.coeff(i), join_vars({power("lambda", i, style), xy_vars}, style), style));
  }
}

std::size_t nonzero_terms(const LambdaPoly& c) {
  std::size_t n = 0;
  for (const auto& v : c.coeffs()) n += v.is_zero() ? 0 : 1;
  return n;
}

// A lambda-polynomial coefficient of a nonconstant x/y monomial: inline when
// it is a single term, parenthesized otherwise.
void append_coefficient(std::vector<Term>& out, const LambdaPoly& c, const std::string& xy_vars, Style style) {
  if (xy_vars.empty() || nonzero_terms(c) <= 1) {
    append_expanded(out, c, xy_vars, style);
    return;
  }
  std::vector<Term> inner;
  append_expanded(inner, c, "", style);
  Term t;
  t.factor = style == Style::Latex ? "\\left(" + render(inner, style) + "\\right)"
                                   : "(" + render(inner, style) + ")";
  t.vars = xy_vars;
  out.push_back(std::move(t));
}

std::string render_lambda(const LambdaPoly& p, Style style) {
  std::vector<Term> terms;
  append_expanded(terms, p, "", style);
  return render(terms, style);
}

std::string render_x(const XPoly& p, Style style) {
  std::vector<Term> terms;
  for (int k = p.degree(); k >= 0; --k) {
    if (p.coeff(k).is_zero()) continue;
    append_coefficient(terms, p.coeff(k), power("x", k, style), style);
  }
  return render(terms, style);
}

std::string render_xy(const XYPoly& p, Style style) {
  std::vector<Term> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [key, c] = *it;
    const std::string vars = join_vars({power("x", key.first, style), power("y", key.second, style)}, style);
    append_coefficient(terms, c, vars, style);
  }
  return render(terms, style);
}

}  // namespace

std::string to_text(const LambdaPoly& p) { return render_lambda(p, Style::Text); }
std::string to_text(const XPoly& p) { return render_x(p, Style::Text); }
std::string to_text(const XYPoly& p) { return render_xy(p, Style::Text); }

std::string to_latex(const Rational& r) {
  const std::string sign = r.sign() < 0 ? "-" : "";
  const Rational a = r.sign() < 0 ? -r : r;
  if (a.is_integer()) return sign + a.to_string();
  return sign + "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}
std::string to_latex(const LambdaPoly& p) { return render_lambda(p, Style::Latex); }
std::string to_latex(const XPoly& p) { return render_x(p, Style::Latex); }
std::string to_latex(const XYPoly& p) { return render_xy(p, Style::Latex); }

}  // namespace tsb
