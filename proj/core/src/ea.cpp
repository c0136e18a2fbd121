#include "gctsp/ea.hpp"

#include <chrono>
#include <stdexcept>

#include "gctsp/decoders.hpp"
#include "gctsp/mutation.hpp"
#include "gctsp/spanning_tree_sampler.hpp"

namespace gctsp {
namespace {

/// Shared (1+1) loop. Initialize and Mutate produce genotypes, Decode maps a
/// genotype to its DecodedSolution (one evaluation per call).
template <typename Genotype, typename Initialize, typename Mutate,
          typename Decode>
std::pair<TrialRecord, Genotype> run_one_plus_one(
    const ClusteredGraph& g, std::uint64_t budget, RandomStream& rng,
    Initialize&& initialize, Mutate&& mutate, Decode&& decode) {
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
  const auto started = std::chrono::steady_clock::now();
  const std::optional<Cost> target = g.known_optimum();
  const std::uint64_t m = static_cast<std::uint64_t>(g.cluster_count());
  const std::uint64_t stagnation_window = 50 * m * m;

  TrialRecord record;
  Genotype parent = initialize(rng);
  DecodedSolution parent_decoded = decode(parent);
  std::uint64_t evaluations = 1;
  std::uint64_t last_improvement = 1;
  record.cost_changes.emplace_back(evaluations, parent_decoded.cost);
  if (target && parent_decoded.cost == *target)
    record.evaluations_to_optimum = evaluations;

  while (!record.evaluations_to_optimum && evaluations < budget) {
    Genotype offspring = mutate(parent, rng);
    DecodedSolution offspring_decoded = decode(offspring);
    ++evaluations;
    if (offspring_decoded.cost <= parent_decoded.cost) {
      if (offspring_decoded.cost < parent_decoded.cost) {
        record.cost_changes.emplace_back(evaluations, offspring_decoded.cost);
        last_improvement = evaluations;
      }
      parent = std::move(offspring);
      parent_decoded = std::move(offspring_decoded);
    }
    if (target && parent_decoded.cost == *target)
      record.evaluations_to_optimum = evaluations;
    if (evaluations - last_improvement >= stagnation_window)
      record.hit_local_plateau = true;
  }

  record.best_cost = parent_decoded.cost;
  record.wall_time_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - started)
          .count());
  return {std::move(record), std::move(parent)};
}

NodeSelection uniform_selection(const ClusteredGraph& g, RandomStream& rng) {
  NodeSelection selection;
  selection.chosen.reserve(g.cluster_count());
  for (int c = 0; c < g.cluster_count(); ++c) {
    const auto& members = g.cluster_members(c);
    selection.chosen.push_back(members[rng.uniform_index(members.size())]);
  }
  return selection;
}

}  // namespace

ClusterEaResult run_cluster_ea_traced(const ClusteredGraph& g,
                                      std::uint64_t budget, RandomStream& rng) {
  auto [record, final_genotype] = run_one_plus_one<NodeSelection>(
      g, budget, rng,
      [&](RandomStream& r) { return uniform_selection(g, r); },
      [&](const NodeSelection& p, RandomStream& r) {
        return mutate_selection(p, g, r);
      },
      [&](const NodeSelection& p) { return mst_on_selection(g, p); });
  return {std::move(record), std::move(final_genotype)};
}

TreeEaResult run_tree_ea_traced(const ClusteredGraph& g, std::uint64_t budget,
                                RandomStream& rng) {
  const ClusterGraph h = cluster_graph(g);
  auto [record, final_genotype] = run_one_plus_one<ClusterTree>(
      g, budget, rng,
      [&](RandomStream& r) { return uniform_spanning_tree(h, r); },
      [&](const ClusterTree& p, RandomStream& r) { return mutate_tree(p, h, r); },
      [&](const ClusterTree& p) { return best_nodes_for_tree(g, p); });
  return {std::move(record), std::move(final_genotype)};
}

TourEaResult run_tour_ea_traced(const ClusteredGraph& g, std::uint64_t budget,
                                RandomStream& rng) {
  if (!cluster_graph(g).connected())
    throw std::invalid_argument(
        "cluster graph is disconnected; no generalized tour exists");
  auto [record, final_genotype] = run_one_plus_one<ClusterTour>(
      g, budget, rng,
      [&](RandomStream& r) { return ClusterTour{r.permutation(g.cluster_count())}; },
      [&](const ClusterTour& p, RandomStream& r) { return mutate_tour(p, r); },
      [&](const ClusterTour& p) { return best_nodes_for_tour(g, p); });
  return {std::move(record), std::move(final_genotype)};
}

TrialRecord run_cluster_ea(const ClusteredGraph& g, std::uint64_t budget,
                           RandomStream& rng) {
  return run_cluster_ea_traced(g, budget, rng).record;
}

TrialRecord run_tree_ea(const ClusteredGraph& g, std::uint64_t budget,
                        RandomStream& rng) {
  return run_tree_ea_traced(g, budget, rng).record;
}

TrialRecord run_tour_ea(const ClusteredGraph& g, std::uint64_t budget,
                        RandomStream& rng) {
  return run_tour_ea_traced(g, budget, rng).record;
}

}  // namespace gctsp
