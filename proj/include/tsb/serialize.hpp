#ifndef TSB_SERIALIZE_HPP
#define TSB_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "tsb/dense_poly.hpp"
#include "tsb/xy_poly.hpp"

namespace tsb {

inline constexpr const char* kSchemaVersion = "tsallis-bernoulli/1";

// JSON encoding
//   Rational   -> canonical string, e.g. "-1/2"
//   LambdaPoly -> array of Rational strings, index i = coefficient of lambda^i
//                 (zero polynomial: [])
//   XPoly      -> {"var":"x","coeffs":[LambdaPoly, ...]}
//   XYPoly     -> [{"xexp":k,"yexp":l,"coeff":LambdaPoly}, ...] sorted by (xexp, yexp)
// The decoders accept exactly this shape and throw std::invalid_argument
// otherwise.

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const LambdaPoly& p);
nlohmann::json to_json(const XPoly& p);
nlohmann::json to_json(const XYPoly& p);

Rational rational_from_json(const nlohmann::json& j);
LambdaPoly lambda_poly_from_json(const nlohmann::json& j);
XPoly xpoly_from_json(const nlohmann::json& j);
XYPoly xypoly_from_json(const nlohmann::json& j);

// Human-readable renderings, terms ordered by descending x-power and then
// descending lambda-power.
std::string to_text(const LambdaPoly& p);
std::string to_text(const XPoly& p);
std::string to_text(const XYPoly& p);

std::string to_latex(const Rational& r);
std::string to_latex(const LambdaPoly& p);
std::string to_latex(const XPoly& p);
std::string to_latex(const XYPoly& p);

}  // namespace tsb

#endif  // TSB_SERIALIZE_HPP
