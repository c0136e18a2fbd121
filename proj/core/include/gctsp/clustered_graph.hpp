#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gctsp/cost.hpp"

namespace gctsp {

/// A complete undirected graph on n nodes partitioned into m clusters, with
/// symmetric scaled-integer costs and an INFINITE sentinel for absent edges.
///
/// Instances are built once (constructor plus set_cost calls, finished by
/// validate()) and treated as immutable afterwards, so they can be shared
/// read-only across concurrent trial workers.
class ClusteredGraph {
 public:
  /// Starts an all-INFINITE instance. cluster_of[v] must map every node to a
  /// cluster id in [0, m); every cluster must be nonempty.
  ClusteredGraph(int cluster_count, std::vector<int> cluster_of,
                 std::uint64_t scale);

  int node_count() const { return n_; }
  int cluster_count() const { return m_; }
  std::uint64_t scale() const { return scale_; }

  int cluster_of(int node) const { return cluster_of_[node]; }
  /// Node ids of one cluster, ascending.
  const std::vector<int>& cluster_members(int cluster) const {
    return members_[cluster];
  }

  Cost cost(int u, int v) const { return cost_[flat(u, v)]; }
  /// Sets both orientations; u == v is rejected (the diagonal stays INFINITE).
  void set_cost(int u, int v, Cost c);

  std::optional<Cost> known_optimum() const { return known_optimum_; }
  void set_known_optimum(Cost c) { known_optimum_ = c; }

  /// Checks the construction invariants (symmetry and the INFINITE diagonal
  /// hold by construction; this checks the cluster partition). Throws
  /// std::invalid_argument on violation.
  void validate() const;

  friend bool operator==(const ClusteredGraph& a, const ClusteredGraph& b);

 private:
  std::size_t flat(int u, int v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }

  int n_ = 0;
  int m_ = 0;
  std::uint64_t scale_ = 1;
  std::vector<int> cluster_of_;
  std::vector<std::vector<int>> members_;
  std::vector<Cost> cost_;
  std::optional<Cost> known_optimum_;
};

/// The contracted graph H: one vertex per cluster, an edge {i,j} exactly where
/// some node pair across the two clusters has finite cost.
class ClusterGraph {
 public:
  ClusterGraph(int cluster_count, const std::vector<std::pair<int, int>>& edges);

  int cluster_count() const { return m_; }
  bool has_edge(int i, int j) const { return adjacency_[flat(i, j)] != 0; }
  /// Neighbour lists, ascending.
  const std::vector<std::vector<int>>& adjacency() const { return neighbours_; }
  /// All edges as (i, j) with i < j, lexicographically sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool connected() const;

 private:
  std::size_t flat(int i, int j) const {
    return static_cast<std::size_t>(i) * m_ + j;
  }

  int m_ = 0;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<int>> neighbours_;
  std::vector<std::pair<int, int>> edges_;
};

/// Derives H from a clustered graph.
ClusterGraph cluster_graph(const ClusteredGraph& g);

}  // namespace gctsp
