#pragma once

#include <json.hpp>

#include "brackets/mellin_barnes.hpp"
#include "brackets/series_eval.hpp"

namespace brackets::io {

using nlohmann::json;

// Schema (field by field):
//   Rational      "p" or "p/q" as a decimal string
//   Symbol        {"name": str, "kind": "index"|"parameter"|"contour"}
//   AffineForm    {"terms": [{"symbol": Symbol, "coeff": Rational}...],
//                  "constant": Rational}           terms sorted by symbol
//   GammaExpr     {"sign": 1|-1, "constant": Rational,
//                  "gamma_factors":  [{"arg": AffineForm, "power": int}...],
//                  "power_factors":  [{"base": str(int), "exponent": AffineForm}...],
//                  "linear_factors": [{"form": AffineForm, "power": int}...]}
//   Bracket       AffineForm (the argument)
//   BracketSeries {"indices": [Symbol...], "coefficient": GammaExpr,
//                  "exponents": {variable: AffineForm...}, "brackets": [Bracket...]}
//   BracketIntegral adds "contour_vars" and "residual_indices", renames the
//                  coefficient field to "integrand"
//   ClosedForm    {"expr": GammaExpr, "divergent": bool}
//   LinearSystem  {"columns": [Symbol...], "matrix": [[Rational...]...],
//                  "rhs": [AffineForm...]}
//   IndexSolution {"bindings": [{"symbol": Symbol, "value": AffineForm}...],
//                  "determinant": Rational}
// Round trips are lossless: the parsers rebuild canonical objects that
// compare structurally equal to the originals.

json to_json(const Rational& r);
json to_json(const Symbol& s);
json to_json(const AffineForm& f);
json to_json(const GammaExpr& e);
json to_json(const Bracket& b);
json to_json(const BracketSeries& s);
json to_json(const BracketIntegral& bi);
json to_json(const ClosedForm& c);
json to_json(const LinearSystem& sys);
json to_json(const IndexSolution& sol);

Rational rational_from_json(const json& j);
Symbol symbol_from_json(const json& j);
AffineForm affine_from_json(const json& j);
GammaExpr gamma_expr_from_json(const json& j);
Bracket bracket_from_json(const json& j);
BracketSeries series_from_json(const json& j);
BracketIntegral integral_from_json(const json& j);
ClosedForm closed_form_from_json(const json& j);

}  // namespace brackets::io
