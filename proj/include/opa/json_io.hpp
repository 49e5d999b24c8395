#pragma once

#include <string>

#include "json.hpp"

#include "opa/gram.hpp"
#include "opa/series.hpp"
#include "opa/weights.hpp"

namespace opa {

// CoeffSeries <-> { "re": [...], "im": [...], "tail_bound": x }
// ("tail_bound": "exact" is accepted and emitted for exact polynomials).
nlohmann::json to_json(const CoeffSeries& s);
CoeffSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Approximant& a);

// Custom weights document:
//   { "prefix": [1.0, ...],
//     "tail": { "type": "ratio", "ratio": r }
//           | { "type": "formula", "scale": s, "exponent": p } }
WeightSequence weights_from_json(const nlohmann::json& j);
WeightSequence weights_from_file(const std::string& path);

}  // namespace opa
