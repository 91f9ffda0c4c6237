#pragma once

#include <string>

#include "pco/digraph.hpp"

namespace pco {

/// JSON document form: {"n": <int>, "edges": [[i, j], ...]}, 0-based.
Digraph parse_graph_json(const std::string& text);
std::string graph_to_json(const Digraph& g);

/// Edge-list text form: one "i j" pair per line, '#' starts a comment.
/// The first non-comment line may be a single integer vertex count;
/// otherwise n is inferred as max index + 1.
Digraph parse_edge_list(const std::string& text);
std::string graph_to_edge_list(const Digraph& g);

/// Load from a file, dispatching on the ".json" extension.
Digraph load_graph(const std::string& path);

}  // namespace pco
