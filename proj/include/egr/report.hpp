#pragma once

#include "egr/bounds.hpp"
#include "egr/graph.hpp"
#include "egr/spectral.hpp"

#include <json.hpp>

namespace egr {

inline constexpr int kSchemaVersion = 1;

// {"num": "...", "den": "...", "decimal": "..."}; integers are strings so
// that no precision is lost in JSON readers.
nlohmann::json rational_json(const Rational& r);
nlohmann::json signature_json(const EgrSignature& sig);
nlohmann::json failure_json(const EgrFailure& f);
nlohmann::json result_json(const EgrResult& r);
nlohmann::json bounds_json(const BoundReport& b);
nlohmann::json verdict_json(const ExtremalVerdict& v);
nlohmann::json spectrum_json(const Spectrum& s);
nlohmann::json moments_json(const MomentTable& m);
// vertex count, edge list, labels and graph6 text
nlohmann::json graph_json(const Graph& g);

}  // namespace egr
