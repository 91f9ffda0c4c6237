#pragma once

#include <cstdint>
#include <string>

#include "pco/digraph.hpp"

namespace pco {

enum class GraphFamily { Path, Cycle, Complete, RandomRootedDag, RandomRooted };

GraphFamily parse_graph_family(const std::string& name);
std::string to_string(GraphFamily family);

/// Deterministic graph generators. Path/Cycle/Complete ignore the seed.
/// RandomRootedDag draws a random topological order with vertex 0 first and
/// guarantees every later vertex one in-edge from an earlier one, so the
/// result is rooted at 0 and acyclic; RandomRooted adds random back-edges
/// on top. Output is always rooted.
Digraph generate(GraphFamily family, int n, std::uint64_t seed);

/// Random strongly connected digraph: a random Hamiltonian cycle plus
/// Bernoulli extra edges.
Digraph random_strongly_connected(int n, std::uint64_t seed);

/// Random quasi-acyclic digraph: strongly connected root component on
/// vertices 0..root_size-1 with an acyclic part hanging off it.
Digraph random_quasi_acyclic(int n, int root_size, std::uint64_t seed);

/// Fixed 12-vertex rooted benchmark graph: a 3-cycle root component feeding
/// a chain, admitting a spanning tree of depth 8.
Digraph histogram_default_graph();

}  // namespace pco
