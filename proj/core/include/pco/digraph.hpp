#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pco/errors.hpp"

namespace pco {

/// Directed edge (i, j): information flows from i to j.
using Edge = std::pair<int, int>;

/// Simple digraph: no self-arcs, no duplicate edges, 0-based vertices.
///
/// Edges are kept in lexicographic order; the position of an edge in that
/// order is its canonical index, which the stochastic pulse model uses to
/// key its Bernoulli draws. Out-edges of a vertex are a contiguous range.
class Digraph {
 public:
  Digraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Edge> out_edges(int v) const;
  int out_degree(int v) const { return row_start_[v + 1] - row_start_[v]; }

  /// Canonical index of the first out-edge of v; out-edge k of v has
  /// canonical index first_out_edge_index(v) + k.
  int first_out_edge_index(int v) const { return row_start_[v]; }

  bool has_edge(int i, int j) const;

  bool operator==(const Digraph&) const = default;

 private:
  int n_;
  std::vector<Edge> edges_;     // sorted lexicographically
  std::vector<int> row_start_;  // n + 1 offsets into edges_
};

enum class DepthKind { Exact, LowerBound };

struct DepthResult {
  int depth = 0;
  DepthKind kind = DepthKind::Exact;
};

struct Condensation {
  Digraph graph;                // root component collapsed to vertex 0
  std::vector<int> vertex_map;  // original vertex -> condensed vertex
};

/// Structural analysis of a digraph. `condensation` and `depth` are only
/// present when the graph is rooted.
struct GraphAnalysis {
  std::vector<int> scc_assignment;  // vertex -> component id
  int scc_count = 0;
  std::vector<int> root_set;  // sorted; empty means not rooted
  bool is_rooted = false;
  bool is_acyclic = false;
  bool is_quasi_acyclic = false;
  std::optional<Condensation> condensation;
  std::optional<DepthResult> depth;
};

/// Strongly connected components (Tarjan). Vertices i and j share a
/// component id iff directed paths i->j and j->i both exist. Component
/// ids are numbered in reverse topological discovery order and then
/// renumbered so that ids follow the smallest vertex of each component.
std::vector<int> strong_components(const Digraph& g);

/// The set of vertices with a directed path to every other vertex;
/// empty means the graph is not rooted.
std::vector<int> root_set(const Digraph& g);

/// Collapse the root component into a single vertex (new vertex 0); all
/// other vertices are preserved in order and edges are deduplicated.
/// Throws errors::NotRooted when the graph has no root.
Condensation condense(const Digraph& g);

/// Maximal depth over directed spanning trees of a rooted digraph.
///
/// Acyclic case: the exact longest root-to-vertex path, computed over a
/// topological order. General case: any root-to-v path extends to a
/// spanning tree and the deepest branch of any spanning tree is a
/// root-to-v path, so the maximal tree depth equals the longest simple
/// path from a root; enumerated exactly for n <= exact_limit, otherwise
/// lower-bounded by the deepest DFS tree over all roots.
DepthResult depth(const Digraph& g, int exact_limit = 10);

enum class TreeMode { MinDepth, MaxDepthHeuristic };

/// Directed spanning tree rooted at `root` with n-1 edges drawn from g.
/// MinDepth uses breadth-first layers; MaxDepthHeuristic uses a DFS tree.
Digraph spanning_tree(const Digraph& g, int root, TreeMode mode);

/// Full analysis bundle; computes condensation and depth when rooted.
GraphAnalysis analyze(const Digraph& g, int depth_exact_limit = 10);

}  // namespace pco
