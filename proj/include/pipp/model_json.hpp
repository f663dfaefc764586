#pragma once

#include <json.hpp>

#include "pipp/geometry.hpp"
#include "pipp/interaction.hpp"

namespace pipp {

// {"family": string, "gamma": [..], "radii": [..], "hardcore": number, "dim": int}
// "hardcore" defaults to 0 and "dim" to 2 when absent.
nlohmann::json model_to_json(const PairwiseInteraction& model);
PairwiseInteraction model_from_json(const nlohmann::json& j);

// {"lower": [..], "upper": [..]}
nlohmann::json box_to_json(const Box& box);
Box box_from_json(const nlohmann::json& j);

/// Parses a JSON file, mapping I/O and syntax failures to ConfigError.
nlohmann::json read_json_file(const std::string& path);

}  // namespace pipp
