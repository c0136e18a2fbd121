#include "gctsp/clustered_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gctsp {

ClusteredGraph::ClusteredGraph(int cluster_count, std::vector<int> cluster_of,
                               std::uint64_t scale)
    : n_(static_cast<int>(cluster_of.size())),
      m_(cluster_count),
      scale_(scale),
      cluster_of_(std::move(cluster_of)) {
  if (m_ < 2) throw std::invalid_argument("cluster count must be at least 2");
  if (n_ < m_) throw std::invalid_argument("need at least one node per cluster");
  if (scale_ == 0) throw std::invalid_argument("scale must be positive");
  members_.resize(m_);
  for (int v = 0; v < n_; ++v) {
    const int c = cluster_of_[v];
    if (c < 0 || c >= m_)
      throw std::invalid_argument("node " + std::to_string(v) +
                                  " has cluster id out of range");
    members_[c].push_back(v);
  }
  cost_.assign(static_cast<std::size_t>(n_) * n_, Cost::infinite());
}

void ClusteredGraph::set_cost(int u, int v, Cost c) {
  if (u == v) throw std::invalid_argument("self-loop cost is fixed INFINITE");
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("node id out of range");
  cost_[flat(u, v)] = c;
  cost_[flat(v, u)] = c;
}

void ClusteredGraph::validate() const {
  for (int c = 0; c < m_; ++c)
    if (members_[c].empty())
      throw std::invalid_argument("cluster " + std::to_string(c) + " is empty");
}

bool operator==(const ClusteredGraph& a, const ClusteredGraph& b) {
  return a.n_ == b.n_ && a.m_ == b.m_ && a.scale_ == b.scale_ &&
         a.cluster_of_ == b.cluster_of_ && a.cost_ == b.cost_ &&
         a.known_optimum_ == b.known_optimum_;
}

ClusterGraph::ClusterGraph(int cluster_count,
                           const std::vector<std::pair<int, int>>& edges)
    : m_(cluster_count) {
  if (m_ < 2) throw std::invalid_argument("cluster count must be at least 2");
  adjacency_.assign(static_cast<std::size_t>(m_) * m_, 0);
  neighbours_.resize(m_);
  for (auto [i, j] : edges) {
    if (i == j || i < 0 || j < 0 || i >= m_ || j >= m_)
      throw std::invalid_argument("bad cluster edge");
    if (adjacency_[flat(i, j)]) continue;
    adjacency_[flat(i, j)] = 1;
    adjacency_[flat(j, i)] = 1;
    neighbours_[i].push_back(j);
    neighbours_[j].push_back(i);
    edges_.emplace_back(std::min(i, j), std::max(i, j));
  }
  for (auto& list : neighbours_) std::sort(list.begin(), list.end());
  std::sort(edges_.begin(), edges_.end());
}

bool ClusterGraph::connected() const {
  std::vector<char> seen(m_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j : neighbours_[i])
      if (!seen[j]) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
  }
  return reached == m_;
}

ClusterGraph cluster_graph(const ClusteredGraph& g) {
  std::vector<std::pair<int, int>> edges;
  const int m = g.cluster_count();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      bool finite = false;
      for (int u : g.cluster_members(i)) {
        for (int v : g.cluster_members(j)) {
          if (g.cost(u, v).is_finite()) {
            finite = true;
            break;
          }
        }
        if (finite) break;
      }
      if (finite) edges.emplace_back(i, j);
    }
  }
  return ClusterGraph(m, edges);
}

}  // namespace gctsp
