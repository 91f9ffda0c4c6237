#include "pco/graph_gen.hpp"

#include <numeric>

#include "pco/rng.hpp"

namespace pco {

GraphFamily parse_graph_family(const std::string& name) {
  if (name == "path") return GraphFamily::Path;
  if (name == "cycle") return GraphFamily::Cycle;
  if (name == "complete") return GraphFamily::Complete;
  if (name == "random-rooted-dag") return GraphFamily::RandomRootedDag;
  if (name == "random-rooted") return GraphFamily::RandomRooted;
  throw errors::ParseError("unknown graph family: " + name);
}

std::string to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::Path: return "path";
    case GraphFamily::Cycle: return "cycle";
    case GraphFamily::Complete: return "complete";
    case GraphFamily::RandomRootedDag: return "random-rooted-dag";
    case GraphFamily::RandomRooted: return "random-rooted";
  }
  return "?";
}

namespace {

constexpr double kDagExtraEdgeProb = 0.25;
constexpr double kBackEdgeProb = 0.15;

std::vector<Edge> random_dag_edges(int n, Rng& rng, std::vector<int>& topo) {
  // Vertex 0 leads the topological order; the rest are shuffled.
  topo.resize(n);
  std::iota(topo.begin(), topo.end(), 0);
  if (n > 1) {
    std::vector<int> rest(topo.begin() + 1, topo.end());
    rng.shuffle(rest);
    std::copy(rest.begin(), rest.end(), topo.begin() + 1);
  }
  std::vector<Edge> edges;
  for (int k = 1; k < n; ++k) {
    int parent_pos = static_cast<int>(rng.uniform_below(k));
    edges.push_back({topo[parent_pos], topo[k]});
    for (int a = 0; a < k; ++a) {
      if (a == parent_pos) continue;
      if (rng.bernoulli(kDagExtraEdgeProb)) edges.push_back({topo[a], topo[k]});
    }
  }
  return edges;
}

}  // namespace

Digraph generate(GraphFamily family, int n, std::uint64_t seed) {
  if (n < 1) throw errors::BadSize("graph size must be >= 1");
  switch (family) {
    case GraphFamily::Path: {
      std::vector<Edge> e;
      for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
      return Digraph(n, std::move(e));
    }
    case GraphFamily::Cycle: {
      if (n < 2) throw errors::BadSize("cycle needs n >= 2");
      std::vector<Edge> e;
      for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
      e.push_back({n - 1, 0});
      return Digraph(n, std::move(e));
    }
    case GraphFamily::Complete: {
      std::vector<Edge> e;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) e.push_back({i, j});
      return Digraph(n, std::move(e));
    }
    case GraphFamily::RandomRootedDag: {
      Rng rng(seed);
      std::vector<int> topo;
      return Digraph(n, random_dag_edges(n, rng, topo));
    }
    case GraphFamily::RandomRooted: {
      Rng rng(seed);
      std::vector<int> topo;
      auto edges = random_dag_edges(n, rng, topo);
      for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a)
          if (rng.bernoulli(kBackEdgeProb)) edges.push_back({topo[b], topo[a]});
      return Digraph(n, std::move(edges));
    }
  }
  throw errors::BadParams("unhandled graph family");
}

Digraph random_strongly_connected(int n, std::uint64_t seed) {
  if (n < 1) throw errors::BadSize("graph size must be >= 1");
  Rng rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<Edge> edges;
  if (n >= 2) {
    for (int k = 0; k < n; ++k) edges.push_back({order[k], order[(k + 1) % n]});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || (std::find(edges.begin(), edges.end(), Edge{i, j}) != edges.end())) continue;
        if (rng.bernoulli(0.3)) edges.push_back({i, j});
      }
  }
  return Digraph(n, std::move(edges));
}

Digraph random_quasi_acyclic(int n, int root_size, std::uint64_t seed) {
  if (root_size < 2 || root_size > n)
    throw errors::BadParams("root component size must be in [2, n]");
  Rng rng(seed);
  std::vector<Edge> edges;
  // Strongly connected core on 0..root_size-1.
  for (int k = 0; k < root_size; ++k) edges.push_back({k, (k + 1) % root_size});
  for (int i = 0; i < root_size; ++i)
    for (int j = 0; j < root_size; ++j) {
      if (i == j || (j == (i + 1) % root_size)) continue;
      if (rng.bernoulli(0.3)) edges.push_back({i, j});
    }
  // Acyclic remainder: every edge goes from a lower index to a higher one,
  // so no cycle can leave the core.
  for (int v = root_size; v < n; ++v) {
    int parent = static_cast<int>(rng.uniform_below(v));
    edges.push_back({parent, v});
    for (int a = 0; a < v; ++a) {
      if (a == parent) continue;
      if (rng.bernoulli(0.2)) edges.push_back({a, v});
    }
  }
  return Digraph(n, std::move(edges));
}

Digraph histogram_default_graph() {
  // 3-cycle root component {0,1,2}; chain 2->3->...->8 and three side
  // vertices. Longest simple path from a root: 0->1->2->3->...->8, length 8.
  std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 0},  {2, 3}, {3, 4}, {4, 5},
                         {5, 6}, {6, 7}, {7, 8},  {3, 9}, {4, 10}, {5, 11}};
  return Digraph(12, std::move(e));
}

}  // namespace pco
