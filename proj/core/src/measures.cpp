#include "gctsp/measures.hpp"

#include <algorithm>

namespace gctsp {

int similarity(const ClusterTour& tour) {
  const int m = static_cast<int>(tour.order.size());
  int count = 0;
  for (int i = 0; i < m; ++i)
    if (tour.order[(i + 1) % m] == (tour.order[i] + 1) % m) ++count;
  return count;
}

int cyclic_adjacency_count(const ClusterTour& tour) {
  const int m = static_cast<int>(tour.order.size());
  int count = 0;
  for (int i = 0; i < m; ++i) {
    const int a = tour.order[i];
    const int b = tour.order[(i + 1) % m];
    if (b == (a + 1) % m || a == (b + 1) % m) ++count;
  }
  return count;
}

int tree_distance(const ClusterTree& candidate, const ClusterTree& reference) {
  int missing = 0;
  for (auto edge : reference.edges)
    if (!std::binary_search(candidate.edges.begin(), candidate.edges.end(),
                            edge))
      ++missing;
  return missing;
}

}  // namespace gctsp
