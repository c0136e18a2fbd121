#include "gctsp/mutation.hpp"

#include <algorithm>

namespace gctsp {
namespace {

/// Edges of the unique cycle in tree + {a, b}: the tree path from a to b plus
/// the new edge itself.
std::vector<std::pair<int, int>> cycle_edges(
    const std::vector<std::pair<int, int>>& tree_edges, int m, int a, int b) {
  std::vector<std::vector<int>> adjacency(m);
  for (auto [u, v] : tree_edges) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  std::vector<int> parent(m, -1);
  std::vector<char> seen(m, 0);
  std::vector<int> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (u == b) break;
    for (int w : adjacency[u])
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        stack.push_back(w);
      }
  }
  std::vector<std::pair<int, int>> cycle;
  for (int u = b; u != a; u = parent[u])
    cycle.emplace_back(std::min(u, parent[u]), std::max(u, parent[u]));
  cycle.emplace_back(std::min(a, b), std::max(a, b));
  return cycle;
}

}  // namespace

NodeSelection mutate_selection(const NodeSelection& selection,
                               const ClusteredGraph& g, RandomStream& rng) {
  NodeSelection offspring = selection;
  const int m = g.cluster_count();
  for (int c = 0; c < m; ++c) {
    if (rng.uniform_below(static_cast<std::uint64_t>(m)) != 0) continue;
    const auto& members = g.cluster_members(c);
    offspring.chosen[c] = members[rng.uniform_index(members.size())];
  }
  return offspring;
}

ClusterTree mutate_tree(const ClusterTree& tree, const ClusterGraph& h,
                        RandomStream& rng) {
  const int m = h.cluster_count();
  const int swaps = sample_poisson1(rng);

  ClusterTree current = tree;
  for (int s = 0; s < swaps; ++s) {
    std::vector<std::pair<int, int>> candidates;
    for (auto edge : h.edges())
      if (!current.contains(edge.first, edge.second)) candidates.push_back(edge);
    if (candidates.empty()) continue;  // a star graph: every swap is a no-op

    const auto inserted = candidates[rng.uniform_index(candidates.size())];
    const auto cycle =
        cycle_edges(current.edges, m, inserted.first, inserted.second);
    const auto removed = cycle[rng.uniform_index(cycle.size())];
    if (removed == inserted) continue;  // removing the new edge restores the tree

    current.edges.erase(
        std::find(current.edges.begin(), current.edges.end(), removed));
    current.edges.push_back(inserted);
    current.normalize();
  }
  return current;
}

ClusterTour mutate_tour(const ClusterTour& tour, RandomStream& rng) {
  const int m = static_cast<int>(tour.order.size());
  const int jumps = 1 + sample_poisson1(rng);

  ClusterTour offspring = tour;
  for (int s = 0; s < jumps; ++s) {
    const int i = rng.uniform_index(static_cast<std::size_t>(m));
    int j = rng.uniform_index(static_cast<std::size_t>(m) - 1);
    if (j >= i) ++j;
    const int moved = offspring.order[i];
    offspring.order.erase(offspring.order.begin() + i);
    offspring.order.insert(offspring.order.begin() + j, moved);
  }
  return offspring;
}

}  // namespace gctsp
