#pragma once

#include <cstdint>
#include <vector>

#include "gctsp/clustered_graph.hpp"
#include "gctsp/random_stream.hpp"

namespace gctsp {

/// Bipartite trap instance for the spanned-nodes representation: one central
/// cluster, m-1 peripheral clusters, m nodes each (n = m^2). The first node of
/// every cluster is the optimal one. Edge costs, scale 1:
///   optimal peripheral    <-> optimal central     1
///   suboptimal peripheral <-> suboptimal central  2
///   suboptimal peripheral <-> optimal central     n^2
///   optimal peripheral    <-> suboptimal central  n
/// Peripheral pairs and intra-cluster pairs are INFINITE. The cluster graph is
/// a star on cluster 0, so it has exactly one spanning tree. known_optimum is
/// m - 1; the all-suboptimal plateau costs 2(m - 1).
ClusteredGraph generate_gs(int m);

/// Trap instance for the tree representation, n = m + 1, costs scaled by 2m.
/// Cluster 0 holds two nodes (node 0 and node 1), cluster 1 holds node 2, the
/// remaining clusters are singletons. Node 0 reaches every peripheral node at
/// 2m, node 2 reaches them at 2m + 1, and the only finite edge of node 1 is
/// {1, 2} at cost m. known_optimum is m + (m-2)(2m+1), achieved exactly by the
/// tree that joins clusters 0 and 1 and hangs every peripheral off cluster 1.
ClusteredGraph generate_gg_mst(int m);

/// Trap instance for the tour representation, n = 2m, costs scaled by m.
/// Cluster i holds black node 2i and white node 2i+1, clusters numbered in
/// optimal-tour order. Black nodes form a cycle of weight-1 edges along
/// consecutive clusters; white nodes form a complete graph of weight-m edges
/// except that consecutive pairs cost 2m; every other pair costs m^3.
/// known_optimum is m (the all-black cycle).
ClusteredGraph generate_gg_tsp(int m);

/// Uniform random instance: every inter-cluster cost is drawn uniformly from
/// [1, max_cost], intra-cluster pairs stay INFINITE, scale 1, known_optimum
/// unset (a brute-force oracle fills it on demand). Deterministic in the seed.
ClusteredGraph generate_random(int m, const std::vector<int>& sizes,
                               std::uint64_t max_cost, std::uint64_t seed);

}  // namespace gctsp
