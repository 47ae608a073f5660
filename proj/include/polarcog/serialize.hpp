#pragma once

#include <json.hpp>
#include <vector>

#include "polarcog/obstructions.hpp"
#include "polarcog/polarity.hpp"

namespace polarcog {

/// {"A": [[v...], ...], "B": [v...]}
nlohmann::json to_json(const PolarPartition& p);
/// Inverse of to_json; throws InvalidInput on a malformed document.
PolarPartition partition_from_json(const nlohmann::json& j);

/// {"verdict": "polar", "partition": {...}} or
/// {"verdict": "obstruction", "vertices": [...], "canonical": "..."}
nlohmann::json to_json(const Certificate& c);

/// [{"expr": "...", "g6": "...", "order": n, "connected": bool}, ...]
nlohmann::json catalog_json(const std::vector<FamilyMember>& members);

}  // namespace polarcog
