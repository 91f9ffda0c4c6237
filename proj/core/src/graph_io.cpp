#include "pco/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pco {

Digraph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw errors::ParseError(std::string("invalid graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw errors::ParseError(R"(graph JSON must be {"n": <int>, "edges": [[i,j], ...]})");
  int n = doc["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw errors::ParseError("each edge must be a pair [i, j]");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Digraph(n, std::move(edges));
}

std::string graph_to_json(const Digraph& g) {
  nlohmann::json doc;
  doc["n"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

Digraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Edge> edges;
  int n = -1;
  int max_vertex = -1;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int a, b;
    if (ls >> a) {
      if (ls >> b) {
        edges.push_back({a, b});
        max_vertex = std::max({max_vertex, a, b});
      } else if (n < 0 && edges.empty()) {
        n = a;  // optional leading vertex count
      } else {
        throw errors::ParseError("malformed edge-list line: " + line);
      }
    }
  }
  if (n < 0) n = max_vertex + 1;
  if (n < 1) throw errors::ParseError("edge list defines no vertices");
  return Digraph(n, std::move(edges));
}

std::string graph_to_edge_list(const Digraph& g) {
  std::ostringstream out;
  out << "# n = " << g.vertex_count() << "\n" << g.vertex_count() << "\n";
  for (const auto& [i, j] : g.edges()) out << i << " " << j << "\n";
  return out.str();
}

Digraph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw errors::ParseError("cannot open graph file: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return parse_graph_json(buf.str());
  return parse_edge_list(buf.str());
}

}  // namespace pco
