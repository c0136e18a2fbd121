#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gctsp/clustered_graph.hpp"
#include "gctsp/genotypes.hpp"
#include "gctsp/random_stream.hpp"

namespace gctsp {

/// Outcome of one seeded (1+1) EA run. Evaluations count lower-level decodes,
/// the initial decode included; offspring identical to the parent still cost
/// one evaluation. cost_changes holds (evaluation, accepted cost) at the
/// initial decode and at every strict improvement, so the accepted-cost
/// trajectory is strictly decreasing there. hit_local_plateau is set once the
/// accepted cost stays unimproved for 50*m^2 consecutive evaluations.
/// best_cost equals the instance's known optimum exactly when
/// evaluations_to_optimum is present.
struct TrialRecord {
  int trial_index = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> evaluations_to_optimum;
  Cost best_cost = Cost::infinite();
  bool hit_local_plateau = false;
  std::uint64_t wall_time_ms = 0;
  std::vector<std::pair<std::uint64_t, Cost>> cost_changes;
};

/// Spanned-nodes (1+1) EA: uniform initial node per cluster; mutation
/// resamples each cluster's node with probability 1/m; offspring accepted on
/// cost <= parent. Stops at the first decode equal to the known optimum or
/// at the evaluation budget. Without a known optimum the run exhausts the
/// budget.
TrialRecord run_cluster_ea(const ClusteredGraph& g, std::uint64_t budget,
                           RandomStream& rng);

/// Tree-representation (1+1) EA: starts from a uniform spanning tree of the
/// cluster graph (throws when it is disconnected), mutates with Pois(1) edge
/// swaps, decodes by tree dynamic programming.
TrialRecord run_tree_ea(const ClusteredGraph& g, std::uint64_t budget,
                        RandomStream& rng);

/// Tour-representation (1+1) EA: starts from a uniform random permutation,
/// mutates with 1 + Pois(1) jumps, decodes by cluster optimization. Throws
/// when the cluster graph is disconnected.
TrialRecord run_tour_ea(const ClusteredGraph& g, std::uint64_t budget,
                        RandomStream& rng);

/// Final accepted genotype of a run, for callers that want to inspect where
/// a trajectory ended (the records themselves stay genotype-agnostic).
struct ClusterEaResult {
  TrialRecord record;
  NodeSelection final_selection;
};
struct TreeEaResult {
  TrialRecord record;
  ClusterTree final_tree;
};
struct TourEaResult {
  TrialRecord record;
  ClusterTour final_tour;
};

ClusterEaResult run_cluster_ea_traced(const ClusteredGraph& g,
                                      std::uint64_t budget, RandomStream& rng);
TreeEaResult run_tree_ea_traced(const ClusteredGraph& g, std::uint64_t budget,
                                RandomStream& rng);
TourEaResult run_tour_ea_traced(const ClusteredGraph& g, std::uint64_t budget,
                                RandomStream& rng);

}  // namespace gctsp
