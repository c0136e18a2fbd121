#include "gctsp/spanning_tree_sampler.hpp"

#include <stdexcept>

namespace gctsp {

ClusterTree uniform_spanning_tree(const ClusterGraph& h, RandomStream& rng) {
  if (!h.connected())
    throw std::invalid_argument(
        "cluster graph is disconnected; no generalized spanning tree exists");

  const int m = h.cluster_count();
  std::vector<char> in_tree(m, 0);
  std::vector<int> successor(m, -1);
  in_tree[0] = 1;

  ClusterTree tree;
  tree.edges.reserve(m - 1);
  for (int v = 1; v < m; ++v) {
    if (in_tree[v]) continue;
    // Random walk from v until the tree is hit; overwriting successor[]
    // erases loops automatically.
    int u = v;
    while (!in_tree[u]) {
      const auto& neighbours = h.adjacency()[u];
      successor[u] = neighbours[rng.uniform_index(neighbours.size())];
      u = successor[u];
    }
    u = v;
    while (!in_tree[u]) {
      in_tree[u] = 1;
      tree.edges.emplace_back(u, successor[u]);
      u = successor[u];
    }
  }
  tree.normalize();
  return tree;
}

}  // namespace gctsp
