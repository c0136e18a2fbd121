#pragma once

// Shared helpers for the unit and acceptance suites. The enumeration oracles
// here stay independent of the library's decoders on purpose: they only use
// edge costs and union-find connectivity checks.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "gctsp/clustered_graph.hpp"
#include "gctsp/cost.hpp"
#include "gctsp/genotypes.hpp"

namespace gctsp::testing {

inline bool edge_set_is_spanning_tree(
    const std::vector<std::pair<int, int>>& edges, int vertex_count) {
  if (static_cast<int>(edges.size()) != vertex_count - 1) return false;
  std::vector<int> parent(vertex_count);
  for (int i = 0; i < vertex_count; ++i) parent[i] = i;
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) {
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

/// Every spanning tree of an m-vertex graph given by an edge list, by
/// exhaustive subset enumeration. Fine up to a couple of dozen edges.
inline std::vector<std::vector<std::pair<int, int>>> enumerate_spanning_trees(
    const std::vector<std::pair<int, int>>& edges, int vertex_count) {
  std::vector<std::vector<std::pair<int, int>>> trees;
  const int e = static_cast<int>(edges.size());
  const int k = vertex_count - 1;
  if (k > e || k < 0) return trees;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    std::vector<std::pair<int, int>> subset;
    subset.reserve(k);
    for (int i : pick) subset.push_back(edges[i]);
    if (edge_set_is_spanning_tree(subset, vertex_count))
      trees.push_back(std::move(subset));
    int i = k - 1;
    while (i >= 0 && pick[i] == e - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return trees;
}

/// Minimum spanning tree cost of the subgraph induced by a selection, by
/// enumerating every spanning tree of the induced finite edges.
inline Cost mst_cost_by_tree_enumeration(const ClusteredGraph& g,
                                         const NodeSelection& selection) {
  const int m = g.cluster_count();
  std::vector<std::pair<int, int>> finite_pairs;  // cluster index pairs
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.cost(selection.chosen[i], selection.chosen[j]).is_finite())
        finite_pairs.emplace_back(i, j);
  Cost best = Cost::infinite();
  for (const auto& tree : enumerate_spanning_trees(finite_pairs, m)) {
    Cost total = Cost::finite(0);
    for (auto [i, j] : tree)
      total += g.cost(selection.chosen[i], selection.chosen[j]);
    if (total < best) best = total;
  }
  return best;
}

/// Calls visit(selection) for every node selection, lexicographic in cluster
/// id. Independent twin of the library-internal enumerator.
template <typename Visitor>
void for_each_selection(const ClusteredGraph& g, Visitor&& visit) {
  const int m = g.cluster_count();
  std::vector<std::size_t> index(m, 0);
  NodeSelection selection;
  selection.chosen.resize(m);
  for (int c = 0; c < m; ++c) selection.chosen[c] = g.cluster_members(c)[0];
  for (;;) {
    visit(selection);
    int c = m - 1;
    while (c >= 0) {
      if (++index[c] < g.cluster_members(c).size()) {
        selection.chosen[c] = g.cluster_members(c)[index[c]];
        break;
      }
      index[c] = 0;
      selection.chosen[c] = g.cluster_members(c)[0];
      --c;
    }
    if (c < 0) return;
  }
}

/// Cost of a tour under a fixed selection: the closed walk over the clusters
/// in tour order.
inline Cost tour_cost(const ClusteredGraph& g, const std::vector<int>& order,
                      const NodeSelection& selection) {
  const int m = static_cast<int>(order.size());
  Cost total = Cost::finite(0);
  for (int t = 0; t < m; ++t)
    total += g.cost(selection.chosen[order[t]],
                    selection.chosen[order[(t + 1) % m]]);
  return total;
}

/// True when the tour visits clusters in numeric cyclic order, forwards or
/// backwards (the 2m permutations realizing the reference cycle).
inline bool is_identity_cycle(const std::vector<int>& order) {
  const int m = static_cast<int>(order.size());
  bool forward = true, backward = true;
  for (int i = 0; i < m; ++i) {
    if (order[(i + 1) % m] != (order[i] + 1) % m) forward = false;
    if (order[(i + 1) % m] != (order[i] + m - 1) % m) backward = false;
  }
  return forward || backward;
}

/// All m! cluster tours.
inline std::vector<std::vector<int>> all_tours(int m) {
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::vector<std::vector<int>> tours;
  do {
    tours.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return tours;
}

}  // namespace gctsp::testing
