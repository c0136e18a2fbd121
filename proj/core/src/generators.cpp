#include "gctsp/generators.hpp"

#include <stdexcept>

namespace gctsp {
namespace {

void require_m(int m) {
  if (m < 4)
    throw std::invalid_argument(
        "hard instances need m >= 4; the construction degenerates below that");
}

}  // namespace

ClusteredGraph generate_gs(int m) {
  require_m(m);
  const int n = m * m;
  std::vector<int> cluster_of(n);
  for (int v = 0; v < n; ++v) cluster_of[v] = v / m;
  ClusteredGraph g(m, std::move(cluster_of), 1);

  // Node c*m is the optimal node of cluster c; cluster 0 is central.
  const std::uint64_t big = static_cast<std::uint64_t>(n) * n;
  for (int c = 1; c < m; ++c) {
    for (int i = 0; i < m; ++i) {
      const int peripheral = c * m + i;
      const bool peripheral_optimal = i == 0;
      for (int j = 0; j < m; ++j) {
        const int central = j;
        const bool central_optimal = j == 0;
        std::uint64_t w;
        if (peripheral_optimal && central_optimal)
          w = 1;
        else if (!peripheral_optimal && !central_optimal)
          w = 2;
        else if (!peripheral_optimal && central_optimal)
          w = big;
        else
          w = static_cast<std::uint64_t>(n);
        g.set_cost(peripheral, central, Cost::finite(w));
      }
    }
  }
  g.set_known_optimum(Cost::finite(static_cast<std::uint64_t>(m) - 1));
  g.validate();
  return g;
}

ClusteredGraph generate_gg_mst(int m) {
  require_m(m);
  const int n = m + 1;
  std::vector<int> cluster_of(n);
  cluster_of[0] = 0;
  cluster_of[1] = 0;
  for (int v = 2; v < n; ++v) cluster_of[v] = v - 1;
  const std::uint64_t scale = 2 * static_cast<std::uint64_t>(m);
  ClusteredGraph g(m, std::move(cluster_of), scale);

  // Peripheral singletons are nodes 3..n-1 (clusters 2..m-1).
  for (int v = 3; v < n; ++v) {
    g.set_cost(0, v, Cost::finite(scale));      // true cost 1
    g.set_cost(2, v, Cost::finite(scale + 1));  // true cost 1 + 1/2m
  }
  g.set_cost(1, 2, Cost::finite(static_cast<std::uint64_t>(m)));  // true 1/2

  const std::uint64_t mm = static_cast<std::uint64_t>(m);
  g.set_known_optimum(Cost::finite(mm + (mm - 2) * (2 * mm + 1)));
  g.validate();
  return g;
}

ClusteredGraph generate_gg_tsp(int m) {
  require_m(m);
  const int n = 2 * m;
  std::vector<int> cluster_of(n);
  for (int v = 0; v < n; ++v) cluster_of[v] = v / 2;
  const std::uint64_t mm = static_cast<std::uint64_t>(m);
  ClusteredGraph g(m, std::move(cluster_of), mm);

  const auto black = [](int cluster) { return 2 * cluster; };
  const auto white = [](int cluster) { return 2 * cluster + 1; };
  const Cost heavy = Cost::finite(mm * mm * mm);  // true cost m^2

  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == m - 1);
      g.set_cost(black(i), black(j), consecutive ? Cost::finite(1) : heavy);
      g.set_cost(white(i), white(j),
                 consecutive ? Cost::finite(2 * mm) : Cost::finite(mm));
      g.set_cost(black(i), white(j), heavy);
      g.set_cost(white(i), black(j), heavy);
    }
  }
  g.set_known_optimum(Cost::finite(mm));  // true cost 1
  g.validate();
  return g;
}

ClusteredGraph generate_random(int m, const std::vector<int>& sizes,
                               std::uint64_t max_cost, std::uint64_t seed) {
  if (m < 2) throw std::invalid_argument("need at least 2 clusters");
  if (static_cast<int>(sizes.size()) != m)
    throw std::invalid_argument("need one size per cluster");
  if (max_cost < 1) throw std::invalid_argument("max_cost must be >= 1");
  std::vector<int> cluster_of;
  for (int c = 0; c < m; ++c) {
    if (sizes[c] < 1) throw std::invalid_argument("cluster sizes must be >= 1");
    cluster_of.insert(cluster_of.end(), sizes[c], c);
  }
  ClusteredGraph g(m, std::move(cluster_of), 1);

  RandomStream rng(seed);
  const int n = g.node_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.cluster_of(u) != g.cluster_of(v))
        g.set_cost(u, v, Cost::finite(1 + rng.uniform_below(max_cost)));
  g.validate();
  return g;
}

}  // namespace gctsp
