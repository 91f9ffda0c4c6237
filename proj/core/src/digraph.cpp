#include "pco/digraph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace pco {

Digraph::Digraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw errors::BadSize("vertex count must be positive, got " + std::to_string(n_));
  for (const auto& [i, j] : edges_) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
      throw errors::OutOfRange("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                               ") out of range for n = " + std::to_string(n_));
    if (i == j) throw errors::ParseError("self-arc (" + std::to_string(i) + ", " + std::to_string(i) + ") not allowed");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw errors::ParseError("duplicate edge in edge list");
  row_start_.assign(n_ + 1, 0);
  for (const auto& e : edges_) row_start_[e.first + 1]++;
  for (int v = 0; v < n_; ++v) row_start_[v + 1] += row_start_[v];
}

std::span<const Edge> Digraph::out_edges(int v) const {
  return {edges_.data() + row_start_[v], edges_.data() + row_start_[v + 1]};
}

bool Digraph::has_edge(int i, int j) const {
  auto span = out_edges(i);
  return std::binary_search(span.begin(), span.end(), Edge{i, j});
}

namespace {

// Iterative Tarjan SCC.
struct TarjanState {
  const Digraph& g;
  std::vector<int> index, lowlink, comp;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  int next_index = 0, comp_count = 0;

  explicit TarjanState(const Digraph& g_)
      : g(g_),
        index(g_.vertex_count(), -1),
        lowlink(g_.vertex_count(), 0),
        comp(g_.vertex_count(), -1),
        on_stack(g_.vertex_count(), false) {}

  void run(int root) {
    struct Frame {
      int v;
      int edge_pos;
    };
    std::vector<Frame> frames{{root, 0}};
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      auto out = g.out_edges(v);
      if (pos < static_cast<int>(out.size())) {
        int w = out[pos++].second;
        if (index[w] < 0) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        if (lowlink[v] == index[v]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = comp_count;
          } while (w != v);
          comp_count++;
        }
        int finished = v;
        frames.pop_back();
        if (!frames.empty()) {
          int parent = frames.back().v;
          lowlink[parent] = std::min(lowlink[parent], lowlink[finished]);
        }
      }
    }
  }
};

}  // namespace

std::vector<int> strong_components(const Digraph& g) {
  TarjanState t(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (t.index[v] < 0) t.run(v);
  // Renumber components by their smallest member for a stable labeling.
  std::vector<int> remap(t.comp_count, -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (remap[t.comp[v]] < 0) remap[t.comp[v]] = next++;
  for (int v = 0; v < g.vertex_count(); ++v) t.comp[v] = remap[t.comp[v]];
  return t.comp;
}

namespace {

int count_components(const std::vector<int>& comp) {
  int c = 0;
  for (int x : comp) c = std::max(c, x + 1);
  return c;
}

// Component in-degrees in the condensation (counting distinct component
// pairs is unnecessary: only zero vs nonzero matters here).
std::vector<int> component_indegree(const Digraph& g, const std::vector<int>& comp, int comp_count) {
  std::vector<int> indeg(comp_count, 0);
  for (const auto& [i, j] : g.edges())
    if (comp[i] != comp[j]) indeg[comp[j]]++;
  return indeg;
}

std::vector<int> roots_from_components(const Digraph& g, const std::vector<int>& comp) {
  const int cc = count_components(comp);
  auto indeg = component_indegree(g, comp, cc);
  int leading = -1, leading_count = 0;
  for (int c = 0; c < cc; ++c)
    if (indeg[c] == 0) {
      leading = c;
      leading_count++;
    }
  // The condensation is a DAG, so a unique source component reaches every
  // vertex; two or more sources cannot reach each other.
  if (leading_count != 1) return {};
  std::vector<int> roots;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (comp[v] == leading) roots.push_back(v);
  return roots;
}

}  // namespace

std::vector<int> root_set(const Digraph& g) {
  return roots_from_components(g, strong_components(g));
}

Condensation condense(const Digraph& g) {
  auto comp = strong_components(g);
  auto roots = roots_from_components(g, comp);
  if (roots.empty()) throw errors::NotRooted();
  const int root_comp = comp[roots[0]];

  std::vector<int> vmap(g.vertex_count(), -1);
  int next = 1;
  for (int v = 0; v < g.vertex_count(); ++v)
    vmap[v] = (comp[v] == root_comp) ? 0 : next++;

  std::set<Edge> mapped;
  for (const auto& [i, j] : g.edges()) {
    int a = vmap[i], b = vmap[j];
    if (a != b) mapped.insert({a, b});
  }
  return {Digraph(next, {mapped.begin(), mapped.end()}), std::move(vmap)};
}

namespace {

// Longest root-to-vertex path in a rooted acyclic digraph, over a
// topological order (Kahn).
int dag_depth_from_root(const Digraph& g, int root) {
  const int n = g.vertex_count();
  std::vector<int> indeg(n, 0);
  for (const auto& e : g.edges()) indeg[e.second]++;
  std::vector<int> order;
  order.reserve(n);
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (const auto& [_, w] : g.out_edges(order[head]))
      if (--indeg[w] == 0) order.push_back(w);
  std::vector<int> dist(n, -1);
  dist[root] = 0;
  int best = 0;
  for (int v : order) {
    if (dist[v] < 0) continue;
    best = std::max(best, dist[v]);
    for (const auto& [_, w] : g.out_edges(v)) dist[w] = std::max(dist[w], dist[v] + 1);
  }
  return best;
}

// Longest simple path from `start`, by exhaustive DFS (exponential; callers
// cap n).
int longest_simple_path(const Digraph& g, int start) {
  std::vector<bool> used(g.vertex_count(), false);
  int best = 0;
  auto dfs = [&](auto&& self, int v, int len) -> void {
    best = std::max(best, len);
    for (const auto& [_, w] : g.out_edges(v)) {
      if (used[w]) continue;
      used[w] = true;
      self(self, w, len + 1);
      used[w] = false;
    }
  };
  used[start] = true;
  dfs(dfs, start, 0);
  return best;
}

// Depth of the DFS tree rooted at `start` (ascending neighbor order).
int dfs_tree_depth(const Digraph& g, int start) {
  std::vector<int> dist(g.vertex_count(), -1);
  dist[start] = 0;
  int best = 0;
  std::vector<std::pair<int, int>> stack{{start, 0}};
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    auto out = g.out_edges(v);
    if (pos < static_cast<int>(out.size())) {
      int w = out[pos++].second;
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        best = std::max(best, dist[w]);
        stack.push_back({w, 0});
      }
    } else {
      stack.pop_back();
    }
  }
  return best;
}

bool acyclic_from_components(const std::vector<int>& comp) {
  // Simple digraph: acyclic iff every strong component is a singleton.
  std::vector<int> size(count_components(comp), 0);
  for (int c : comp) size[c]++;
  return std::all_of(size.begin(), size.end(), [](int s) { return s == 1; });
}

}  // namespace

DepthResult depth(const Digraph& g, int exact_limit) {
  auto comp = strong_components(g);
  auto roots = roots_from_components(g, comp);
  if (roots.empty()) throw errors::NotRooted();
  if (acyclic_from_components(comp)) return {dag_depth_from_root(g, roots[0]), DepthKind::Exact};
  int best = 0;
  if (g.vertex_count() <= exact_limit) {
    for (int r : roots) best = std::max(best, longest_simple_path(g, r));
    return {best, DepthKind::Exact};
  }
  for (int r : roots) best = std::max(best, dfs_tree_depth(g, r));
  return {best, DepthKind::LowerBound};
}

Digraph spanning_tree(const Digraph& g, int root, TreeMode mode) {
  auto roots = root_set(g);
  if (roots.empty()) throw errors::NotRooted();
  if (!std::binary_search(roots.begin(), roots.end(), root))
    throw errors::BadRoot("vertex " + std::to_string(root) + " is not a root");

  const int n = g.vertex_count();
  std::vector<int> parent(n, -1);
  if (mode == TreeMode::MinDepth) {
    std::vector<int> queue{root};
    std::vector<bool> seen(n, false);
    seen[root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (const auto& [_, w] : g.out_edges(v)) {
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  } else {
    std::vector<bool> seen(n, false);
    seen[root] = true;
    std::vector<std::pair<int, int>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      auto out = g.out_edges(v);
      if (pos < static_cast<int>(out.size())) {
        int w = out[pos++].second;
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = v;
          stack.push_back({w, 0});
        }
      } else {
        stack.pop_back();
      }
    }
  }
  std::vector<Edge> tree;
  tree.reserve(n - 1);
  for (int v = 0; v < n; ++v)
    if (v != root) tree.push_back({parent[v], v});
  return Digraph(n, std::move(tree));
}

GraphAnalysis analyze(const Digraph& g, int depth_exact_limit) {
  GraphAnalysis a;
  a.scc_assignment = strong_components(g);
  a.scc_count = count_components(a.scc_assignment);
  a.root_set = roots_from_components(g, a.scc_assignment);
  a.is_rooted = !a.root_set.empty();
  a.is_acyclic = acyclic_from_components(a.scc_assignment);
  if (a.is_rooted) {
    // Quasi-acyclic: every cycle lives inside the root component, i.e.
    // every other component is a singleton.
    const int root_comp = a.scc_assignment[a.root_set[0]];
    std::vector<int> size(a.scc_count, 0);
    for (int c : a.scc_assignment) size[c]++;
    a.is_quasi_acyclic = true;
    for (int c = 0; c < a.scc_count; ++c)
      if (c != root_comp && size[c] > 1) a.is_quasi_acyclic = false;
    a.condensation = condense(g);
    a.depth = depth(g, depth_exact_limit);
  }
  return a;
}

}  // namespace pco
