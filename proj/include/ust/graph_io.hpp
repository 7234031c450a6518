#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "ust/graph.hpp"

namespace ust {

/// Graph JSON:
///   {"vertices": 5, "edges": [{"u": 0, "v": 1, "w": "3/2"}, ...]}
/// "w" is optional (default 1) and may be a JSON number, a decimal string or
/// a "p/q" string. Family shorthand: {"family": "torus", "n": 3}.
///
/// Errors are Error(parse_error) naming the offending field, e.g.
/// "edges[2].w", or the byte offset for malformed JSON.
Graph graph_from_json(const nlohmann::json& doc);
Graph parse_graph_text(std::string_view text);

/// Reads a file, or stdin when path is "-".
Graph load_graph(const std::string& path);

nlohmann::json graph_to_json(const Graph& g);

}  // namespace ust
