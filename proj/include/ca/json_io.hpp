#pragma once

#include <json.hpp>

#include "ca/af1.hpp"
#include "ca/param_poly.hpp"
#include "ca/pgrowth.hpp"
#include "ca/report.hpp"

namespace ca {

using Json = nlohmann::json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// A polynomial is an array of terms {"vars": {name: exponent}, "coeff": "n/d"}.
Json poly_to_json(const ParamPoly& p);
ParamPoly poly_from_json(const Json& j);
Var var_from_name(const std::string& name);

Json matrix_to_json(const PPolyMatrix& m);
PPolyMatrix matrix_from_json(const Json& j);

Json report_to_json(const Report& r);

/// Algebra format: {"dim": n, "unit": [..], "table": [[[..]]]}.
Json fd_to_json(const FDAlgebra& a);
FDAlgebra fd_from_json(const Json& j);

/// Parses a JSON document, rethrowing as ParseError with position info.
Json parse_json(const std::string& text);
Json load_json_file(const std::string& path);

}  // namespace ca
