#include "gctsp/genotypes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gctsp {

void NodeSelection::validate(const ClusteredGraph& g) const {
  if (static_cast<int>(chosen.size()) != g.cluster_count())
    throw std::invalid_argument("selection must pick one node per cluster");
  for (int c = 0; c < g.cluster_count(); ++c) {
    const int v = chosen[c];
    if (v < 0 || v >= g.node_count() || g.cluster_of(v) != c)
      throw std::invalid_argument("selection for cluster " + std::to_string(c) +
                                  " is not one of its nodes");
  }
}

void ClusterTree::normalize() {
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
}

bool ClusterTree::contains(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

void ClusterTree::validate(const ClusterGraph& h) const {
  const int m = h.cluster_count();
  if (static_cast<int>(edges.size()) != m - 1)
    throw std::invalid_argument("spanning tree needs exactly m-1 edges");
  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= m || b >= m || a == b)
      throw std::invalid_argument("tree edge endpoints out of range");
    if (!h.has_edge(a, b))
      throw std::invalid_argument("tree edge not present in the cluster graph");
    const int ra = find(a), rb = find(b);
    if (ra == rb) throw std::invalid_argument("tree contains a cycle");
    parent[ra] = rb;
  }
}

void ClusterTour::validate(int cluster_count) const {
  if (static_cast<int>(order.size()) != cluster_count)
    throw std::invalid_argument("tour must visit every cluster once");
  std::vector<char> seen(cluster_count, 0);
  for (int c : order) {
    if (c < 0 || c >= cluster_count || seen[c])
      throw std::invalid_argument("tour is not a permutation of the clusters");
    seen[c] = 1;
  }
}

}  // namespace gctsp
