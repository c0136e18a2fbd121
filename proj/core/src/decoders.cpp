#include "gctsp/decoders.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace gctsp {
namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

std::pair<int, int> ordered(int u, int v) {
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

}  // namespace

DecodedSolution mst_on_selection(const ClusteredGraph& g,
                                 const NodeSelection& selection) {
  selection.validate(g);
  const int m = g.cluster_count();

  std::vector<std::tuple<std::uint64_t, int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Cost c = g.cost(selection.chosen[i], selection.chosen[j]);
      if (c.is_finite()) edges.emplace_back(c.value(), i, j);
    }
  }
  std::sort(edges.begin(), edges.end());

  DecodedSolution result{selection, Cost::finite(0), {}};
  UnionFind components(m);
  int used = 0;
  for (const auto& [w, i, j] : edges) {
    if (!components.unite(i, j)) continue;
    result.cost += Cost::finite(w);
    result.structure_edges.push_back(
        ordered(selection.chosen[i], selection.chosen[j]));
    if (++used == m - 1) break;
  }
  if (used != m - 1) return {selection, Cost::infinite(), {}};
  std::sort(result.structure_edges.begin(), result.structure_edges.end());
  return result;
}

std::vector<int> tree_visit_order(int cluster_count, const ClusterTree& tree) {
  std::vector<std::vector<int>> adjacency(cluster_count);
  for (auto [a, b] : tree.edges) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());

  std::vector<int> preorder;
  preorder.reserve(cluster_count);
  std::vector<char> seen(cluster_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    preorder.push_back(i);
    // Push in reverse so the lowest-id child is visited first.
    for (auto it = adjacency[i].rbegin(); it != adjacency[i].rend(); ++it)
      if (!seen[*it]) {
        seen[*it] = 1;
        stack.push_back(*it);
      }
  }
  return preorder;
}

DecodedSolution best_nodes_for_tree(const ClusteredGraph& g,
                                    const ClusterTree& tree) {
  const int m = g.cluster_count();
  if (static_cast<int>(tree.edges.size()) != m - 1)
    throw std::invalid_argument("spanning tree needs exactly m-1 edges");

  std::vector<std::vector<int>> adjacency(m);
  for (auto [a, b] : tree.edges) {
    if (a < 0 || b < 0 || a >= m || b >= m || a == b)
      throw std::invalid_argument("tree edge endpoints out of range");
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());

  // Root at cluster 0; order[] is a preorder, children ascending.
  std::vector<int> order;
  order.reserve(m);
  std::vector<int> parent(m, -1);
  std::vector<char> seen(m, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    order.push_back(i);
    for (auto it = adjacency[i].rbegin(); it != adjacency[i].rend(); ++it)
      if (!seen[*it]) {
        seen[*it] = 1;
        parent[*it] = i;
        stack.push_back(*it);
      }
  }
  if (static_cast<int>(order.size()) != m)
    throw std::invalid_argument("tree does not span all clusters");

  // subtree_cost[i][x]: optimal cost of cluster i's subtree when cluster i
  // spans its x-th member.
  std::vector<std::vector<Cost>> subtree_cost(m);
  for (int i = 0; i < m; ++i)
    subtree_cost[i].assign(g.cluster_members(i).size(), Cost::finite(0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int child = *it;
    if (parent[child] < 0) continue;
    const int up = parent[child];
    const auto& child_members = g.cluster_members(child);
    const auto& up_members = g.cluster_members(up);
    for (std::size_t x = 0; x < up_members.size(); ++x) {
      Cost best = Cost::infinite();
      for (std::size_t y = 0; y < child_members.size(); ++y) {
        const Cost candidate =
            subtree_cost[child][y] + g.cost(up_members[x], child_members[y]);
        if (candidate < best) best = candidate;
      }
      subtree_cost[up][x] += best;
    }
  }

  const auto& roots = g.cluster_members(0);
  std::size_t best_root = 0;
  for (std::size_t x = 1; x < roots.size(); ++x)
    if (subtree_cost[0][x] < subtree_cost[0][best_root]) best_root = x;
  const Cost total = subtree_cost[0][best_root];

  NodeSelection selection;
  selection.chosen.assign(m, -1);
  selection.chosen[0] = roots[best_root];
  // Top-down extraction in preorder: the lowest node id at every minimum.
  for (int i : order) {
    for (int child : adjacency[i]) {
      if (child == parent[i]) continue;
      const auto& child_members = g.cluster_members(child);
      const int parent_node = selection.chosen[i];
      std::size_t best = 0;
      Cost best_cost = Cost::infinite();
      for (std::size_t y = 0; y < child_members.size(); ++y) {
        const Cost candidate =
            subtree_cost[child][y] + g.cost(parent_node, child_members[y]);
        if (candidate < best_cost) {
          best_cost = candidate;
          best = y;
        }
      }
      selection.chosen[child] = child_members[best];
    }
  }

  if (total.is_infinite()) return {std::move(selection), Cost::infinite(), {}};

  DecodedSolution result{std::move(selection), total, {}};
  result.structure_edges.reserve(tree.edges.size());
  for (auto [a, b] : tree.edges)
    result.structure_edges.push_back(
        ordered(result.selection.chosen[a], result.selection.chosen[b]));
  std::sort(result.structure_edges.begin(), result.structure_edges.end());
  return result;
}

std::vector<int> tour_layer_order(const ClusteredGraph& g,
                                  const ClusterTour& tour) {
  const int m = g.cluster_count();
  int start_position = 0;
  for (int p = 1; p < m; ++p) {
    const auto size = g.cluster_members(tour.order[p]).size();
    const auto best = g.cluster_members(tour.order[start_position]).size();
    if (size < best || (size == best &&
                        tour.order[p] < tour.order[start_position]))
      start_position = p;
  }
  std::vector<int> layers(m);
  for (int t = 0; t < m; ++t) layers[t] = tour.order[(start_position + t) % m];
  return layers;
}

DecodedSolution best_nodes_for_tour(const ClusteredGraph& g,
                                    const ClusterTour& tour) {
  const int m = g.cluster_count();
  tour.validate(m);
  const std::vector<int> layers = tour_layer_order(g, tour);
  const auto& starts = g.cluster_members(layers[0]);

  // completion[t][y]: cheapest walk from the y-th node of layer t through the
  // remaining layers and back to the start node, computed per start.
  std::vector<std::vector<Cost>> completion(m);
  for (int t = 1; t < m; ++t)
    completion[t].assign(g.cluster_members(layers[t]).size(), Cost::infinite());

  Cost best_total = Cost::infinite();
  NodeSelection best_selection;
  best_selection.chosen.assign(m, -1);
  for (int c = 0; c < m; ++c)
    best_selection.chosen[c] = g.cluster_members(c).front();

  for (int start_node : starts) {
    const auto& last_members = g.cluster_members(layers[m - 1]);
    for (std::size_t y = 0; y < last_members.size(); ++y)
      completion[m - 1][y] = g.cost(last_members[y], start_node);
    for (int t = m - 2; t >= 1; --t) {
      const auto& here = g.cluster_members(layers[t]);
      const auto& next = g.cluster_members(layers[t + 1]);
      for (std::size_t y = 0; y < here.size(); ++y) {
        Cost best = Cost::infinite();
        for (std::size_t z = 0; z < next.size(); ++z) {
          const Cost candidate = g.cost(here[y], next[z]) + completion[t + 1][z];
          if (candidate < best) best = candidate;
        }
        completion[t][y] = best;
      }
    }
    Cost total = Cost::infinite();
    const auto& first = g.cluster_members(layers[1]);
    for (std::size_t z = 0; z < first.size(); ++z) {
      const Cost candidate = g.cost(start_node, first[z]) + completion[1][z];
      if (candidate < total) total = candidate;
    }
    if (total >= best_total) continue;  // strict: earlier (lower) start wins ties
    best_total = total;

    // Forward extraction: at every layer the lowest node id whose edge plus
    // completion still meets the remaining optimum. total < INFINITE here.
    best_selection.chosen[layers[0]] = start_node;
    Cost remaining = total;
    int current = start_node;
    for (int t = 1; t < m; ++t) {
      const auto& members = g.cluster_members(layers[t]);
      for (std::size_t y = 0; y < members.size(); ++y) {
        if (g.cost(current, members[y]) + completion[t][y] == remaining) {
          remaining = completion[t][y];
          current = members[y];
          best_selection.chosen[layers[t]] = current;
          break;
        }
      }
    }
  }

  if (best_total.is_infinite())
    return {std::move(best_selection), Cost::infinite(), {}};

  DecodedSolution result{std::move(best_selection), best_total, {}};
  result.structure_edges.reserve(m);
  for (int t = 0; t < m; ++t)
    result.structure_edges.push_back(
        ordered(result.selection.chosen[layers[t]],
                result.selection.chosen[layers[(t + 1) % m]]));
  std::sort(result.structure_edges.begin(), result.structure_edges.end());
  return result;
}

}  // namespace gctsp
