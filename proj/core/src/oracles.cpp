#include "gctsp/oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "gctsp/decoders.hpp"

namespace gctsp {
namespace {

constexpr std::uint64_t kSelectionGuard = 1'000'000;
constexpr std::uint64_t kTourGuard = 10'000'000;

std::uint64_t selection_space(const ClusteredGraph& g) {
  std::uint64_t product = 1;
  for (int c = 0; c < g.cluster_count(); ++c) {
    product *= g.cluster_members(c).size();
    if (product > kTourGuard) return product;  // early out, callers only compare
  }
  return product;
}

/// Calls visit(selection) for every selection, in lexicographic cluster-id
/// order (each chosen[i] runs over the cluster's members ascending).
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

/// Compares two selections by node id along the given cluster visit order.
bool key_less(const NodeSelection& a, const NodeSelection& b,
              const std::vector<int>& visit_order) {
  for (int c : visit_order) {
    if (a.chosen[c] != b.chosen[c]) return a.chosen[c] < b.chosen[c];
  }
  return false;
}

Cost tree_cost(const ClusteredGraph& g, const ClusterTree& tree,
               const NodeSelection& selection) {
  Cost total = Cost::finite(0);
  for (auto [a, b] : tree.edges)
    total += g.cost(selection.chosen[a], selection.chosen[b]);
  return total;
}

Cost tour_cost(const ClusteredGraph& g, const ClusterTour& tour,
               const NodeSelection& selection) {
  const int m = g.cluster_count();
  Cost total = Cost::finite(0);
  for (int t = 0; t < m; ++t)
    total += g.cost(selection.chosen[tour.order[t]],
                    selection.chosen[tour.order[(t + 1) % m]]);
  return total;
}

DecodedSolution finish_tree(const ClusterTree& tree, NodeSelection selection,
                            Cost cost) {
  DecodedSolution result{std::move(selection), cost, {}};
  if (cost.is_infinite()) return result;
  for (auto [a, b] : tree.edges) {
    const int u = result.selection.chosen[a];
    const int v = result.selection.chosen[b];
    result.structure_edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(result.structure_edges.begin(), result.structure_edges.end());
  return result;
}

DecodedSolution finish_tour(const ClusterTour& tour, NodeSelection selection,
                            Cost cost) {
  DecodedSolution result{std::move(selection), cost, {}};
  if (cost.is_infinite()) return result;
  const int m = static_cast<int>(tour.order.size());
  for (int t = 0; t < m; ++t) {
    const int u = result.selection.chosen[tour.order[t]];
    const int v = result.selection.chosen[tour.order[(t + 1) % m]];
    result.structure_edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(result.structure_edges.begin(), result.structure_edges.end());
  return result;
}

void check_selection_guard(const ClusteredGraph& g) {
  if (selection_space(g) > kSelectionGuard)
    throw std::invalid_argument(
        "selection space exceeds the brute-force guard of 10^6");
}

}  // namespace

DecodedSolution brute_nodes_for_tree(const ClusteredGraph& g,
                                     const ClusterTree& tree) {
  check_selection_guard(g);
  const std::vector<int> visit_order =
      tree_visit_order(g.cluster_count(), tree);

  Cost best = Cost::infinite();
  NodeSelection best_selection;
  bool have = false;
  for_each_selection(g, [&](const NodeSelection& selection) {
    const Cost cost = tree_cost(g, tree, selection);
    if (!have || cost < best ||
        (cost == best && key_less(selection, best_selection, visit_order))) {
      best = cost;
      best_selection = selection;
      have = true;
    }
  });
  return finish_tree(tree, std::move(best_selection), best);
}

DecodedSolution brute_nodes_for_tour(const ClusteredGraph& g,
                                     const ClusterTour& tour) {
  check_selection_guard(g);
  tour.validate(g.cluster_count());
  const std::vector<int> visit_order = tour_layer_order(g, tour);

  Cost best = Cost::infinite();
  NodeSelection best_selection;
  bool have = false;
  for_each_selection(g, [&](const NodeSelection& selection) {
    const Cost cost = tour_cost(g, tour, selection);
    if (!have || cost < best ||
        (cost == best && key_less(selection, best_selection, visit_order))) {
      best = cost;
      best_selection = selection;
      have = true;
    }
  });
  return finish_tour(tour, std::move(best_selection), best);
}

DecodedSolution brute_force_gmstp(const ClusteredGraph& g) {
  check_selection_guard(g);
  DecodedSolution best;
  best.cost = Cost::infinite();
  bool have = false;
  for_each_selection(g, [&](const NodeSelection& selection) {
    DecodedSolution candidate = mst_on_selection(g, selection);
    // First strictly better wins: the lexicographically smallest optimum.
    if (!have || candidate.cost < best.cost) {
      best = std::move(candidate);
      have = true;
    }
  });
  return best;
}

DecodedSolution brute_force_gtsp(const ClusteredGraph& g) {
  const int m = g.cluster_count();
  std::uint64_t tours = 1;
  for (int k = 2; k < m; ++k) {
    tours *= k;
    if (tours > kTourGuard) break;
  }
  tours = m >= 3 ? tours / 2 : 1;
  const std::uint64_t space = selection_space(g);
  if (space > kSelectionGuard || tours > kTourGuard / std::max<std::uint64_t>(space, 1) )
    throw std::invalid_argument(
        "tour x selection space exceeds the brute-force guard of 10^7");

  // Canonical tours: fixed first cluster, second position below the last
  // (kills rotations and reversals).
  ClusterTour tour;
  tour.order.resize(m);
  std::vector<int> rest(m - 1);
  for (int c = 1; c < m; ++c) rest[c - 1] = c;

  DecodedSolution best;
  best.cost = Cost::infinite();
  bool have = false;
  do {
    if (m >= 3 && rest.front() > rest.back()) continue;
    tour.order[0] = 0;
    std::copy(rest.begin(), rest.end(), tour.order.begin() + 1);
    DecodedSolution candidate = brute_nodes_for_tour(g, tour);
    if (!have || candidate.cost < best.cost) {
      best = std::move(candidate);
      have = true;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

}  // namespace gctsp
