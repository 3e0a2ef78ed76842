#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "decomp/decomposition.hpp"
#include "decomp/invariants.hpp"

namespace decomp {

// Decomposition file format: {"n": int, "r": int, "k": int, "colors": [...]},
// colors in colex edge order.  The explicit variant replaces "colors" with an
// "edges" array listing each edge's vertex set and color, again in colex
// order.  The reader accepts either shape.
nlohmann::json decomposition_to_json(const Decomposition& d);
nlohmann::json decomposition_to_explicit_json(const Decomposition& d);
Decomposition decomposition_from_json(const nlohmann::json& j);

// Witness file format: {"type": "clique"|"coloring", "data": [...]}.
nlohmann::json clique_witness_to_json(const CliqueWitness& w);
nlohmann::json coloring_witness_to_json(const ColoringWitness& w);

// Round-trips the parsed witness; throws std::invalid_argument on shape errors.
CliqueWitness clique_witness_from_json(const nlohmann::json& j);
ColoringWitness coloring_witness_from_json(const nlohmann::json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace decomp
