#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "thetapos/matrix.hpp"
#include "thetapos/so3q.hpp"
#include "thetapos/totpos.hpp"

namespace thetapos::io {

using json = nlohmann::json;

/// Scalars travel as strings "p/q" or "p"; plain JSON integers are accepted on
/// input. `field` names the location for diagnostics.
Rational scalar_from_json(const json& j, const std::string& field);
json scalar_to_json(const Rational& r);

Vector vector_from_json(const json& j, const std::string& field);
json vector_to_json(const Vector& v);

/// {"rows": n, "cols": m, "entries": [["p/q", ...], ...]}
Matrix matrix_from_json(const json& j, const std::string& field = "matrix");
json matrix_to_json(const Matrix& m);

/// Words are arrays of 1-based generator indices; returned 1-based.
std::vector<int> word_from_json(const json& j, const std::string& field = "word");

json parse_document(const std::string& text);

/// {"word": [...], "values": ["p/q", ...]}
PositiveParams positive_params_from_json(const json& j, const std::string& field = "params");
json positive_params_to_json(const PositiveParams& p);

/// {"word": [...], "slots": [{"scalar": "p/q"} | {"vector": ["p/q", ...]}]}
B2Params b2_params_from_json(const json& j, const std::string& field = "params");
json b2_params_to_json(const B2Params& p);

}  // namespace thetapos::io
