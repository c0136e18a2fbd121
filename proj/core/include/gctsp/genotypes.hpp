#pragma once

#include <utility>
#include <vector>

#include "gctsp/clustered_graph.hpp"
#include "gctsp/cost.hpp"

namespace gctsp {

/// Lower-level decision: one node per cluster, chosen[i] belongs to cluster i.
struct NodeSelection {
  std::vector<int> chosen;

  /// Throws std::invalid_argument unless every cluster has exactly one node
  /// from itself.
  void validate(const ClusteredGraph& g) const;
};

/// Upper-level genotype for the tree representation: a spanning tree of the
/// cluster graph, edges normalized to (low, high) and sorted.
struct ClusterTree {
  std::vector<std::pair<int, int>> edges;

  void normalize();
  bool contains(int i, int j) const;
  /// Spanning-tree shape over m clusters: m-1 edges, connected, all edges in
  /// the cluster graph. Throws std::invalid_argument otherwise.
  void validate(const ClusterGraph& h) const;

  friend bool operator==(const ClusterTree&, const ClusterTree&) = default;
};

/// Upper-level genotype for the tour representation: a permutation of the
/// clusters. Rotations and the reversal are distinct genotypes; nothing is
/// canonicalized.
struct ClusterTour {
  std::vector<int> order;

  void validate(int cluster_count) const;

  friend bool operator==(const ClusterTour&, const ClusterTour&) = default;
};

/// Output of every lower-level decoder: the chosen nodes, the realized
/// node-level edges, and their total scaled cost. For a finite decode the
/// cost equals the sum over structure_edges; when no finite realization
/// exists, cost is INFINITE and structure_edges is empty.
struct DecodedSolution {
  NodeSelection selection;
  Cost cost;
  std::vector<std::pair<int, int>> structure_edges;
};

}  // namespace gctsp
