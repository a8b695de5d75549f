#pragma once

// JSON form of product ensembles:
//   {"d1": 2, "d2": 2, "label": "...",
//    "states": [{"alice": [[re, im], ...], "bob": [[re, im], ...]}, ...]}

#include <string>
#include <string_view>

#include <json.hpp>

#include "enscoh/ensembles.hpp"

namespace enscoh {

/// Throws Error on schema violations or invalid ensembles.
ProductEnsemble ensemble_from_json(const nlohmann::json& j);
nlohmann::json ensemble_to_json(const ProductEnsemble& e);

/// Parses a JSON document (Error on malformed text).
ProductEnsemble parse_ensemble(std::string_view text);
ProductEnsemble load_ensemble_file(const std::string& path);

/// A registry name, or else a path to a JSON file.
ProductEnsemble resolve_ensemble(const std::string& name_or_path);

}  // namespace enscoh
