#pragma once

#include <string>

#include "json.hpp"

#include "impsel/digraph.hpp"

namespace impsel {

// Text format, bit-exact: header line "n <N>", then one "<u> <v>" line per
// edge, 1-indexed. Duplicate edges and self-loops are parse errors.
Digraph parse_graph_text(const std::string& text);
std::string graph_to_text(const Digraph& g);

// JSON form: {"n": N, "edges": [[u, v], ...]}.
Digraph parse_graph_json(const nlohmann::json& j);
nlohmann::ordered_json graph_to_json(const Digraph& g);

// Sniffs the format: leading '{' means JSON, anything else the text format.
Digraph parse_graph_auto(const std::string& text);

}  // namespace impsel
