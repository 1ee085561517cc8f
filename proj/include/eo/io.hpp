#pragma once

#include <string>

#include "eo/graph.hpp"

namespace eo {

// Text format: first line "n m", then m lines "u v" (0-based). '#' starts a
// comment line. JSON format: {"n": int, "edges": [[u,v],...]}.
Graph parse_graph_text(const std::string& text);
Graph parse_graph_json(const std::string& text);
// Sniffs the format: leading '{' means JSON.
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);

std::string graph_to_text(const Graph& g);
std::string graph_to_json(const Graph& g);

}  // namespace eo
