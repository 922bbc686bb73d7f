#pragma once

#include <json.hpp>

#include "circulant/characterization.hpp"
#include "circulant/construction.hpp"

namespace circ {

// Wire formats. Key order is alphabetical (nlohmann objects are ordered
// maps), so identical inputs serialize to identical bytes.

// {"n": 12, "eigenvalues": [[c0, c1, ...], ...], "canonical_key": "<hex>"}
nlohmann::json to_json(const Spectrum& s);

// {"status": "...", "reason": "...", "witness": {"type": "multiplier"|"permutation", "value": ...}}
// witness omitted when there is none.
nlohmann::json to_json(const IsomorphismVerdict& v);

nlohmann::json to_json(const CharacterizationReport& r);

nlohmann::json to_json(const ConstructionReport& r);

}  // namespace circ
