#pragma once

#include <string>

#include <json.hpp>

#include "expr.hpp"

namespace sgc {

// Canonical serialization: a JSON array of term objects
//   { "coeff": [[a_exponent, "num", "den"], ...],
//     "jets":  [[k, exponent], ...],
//     "trig":  {"kind": "unit"|"sin"|"cos", "mode": m} }
// sorted by (jets lexicographic by k then exponent, trig kind, mode).
// Numerator and denominator are decimal strings so the round trip is
// bit exact at any size.
nlohmann::ordered_json expr_to_json(const Expr& e);
Expr expr_from_json(const nlohmann::json& j);

std::string expr_to_text(const Expr& e);
std::string expr_to_latex(const Expr& e);

}  // namespace sgc
