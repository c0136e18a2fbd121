#pragma once

#include "gctsp/clustered_graph.hpp"
#include "gctsp/genotypes.hpp"
#include "gctsp/random_stream.hpp"

namespace gctsp {

/// Spanned-nodes mutation: independently for each cluster, with probability
/// 1/m the chosen node is resampled uniformly from the whole cluster (the
/// current node may be redrawn).
NodeSelection mutate_selection(const NodeSelection& selection,
                               const ClusteredGraph& g, RandomStream& rng);

/// Tree mutation: Pois(1) successive edge swaps. One swap inserts a uniform
/// non-tree edge of h and removes a uniform edge of the resulting cycle; the
/// candidate set includes the inserted edge itself, so a swap may restore the
/// tree. When h has no non-tree edge the swap is a no-op. The result is
/// always a spanning tree.
ClusterTree mutate_tree(const ClusterTree& tree, const ClusterGraph& h,
                        RandomStream& rng);

/// Tour mutation: 1 + Pois(1) jump moves. One jump draws two distinct
/// positions (i, j) uniformly, removes the element at i and reinserts it so
/// that it occupies position j.
ClusterTour mutate_tour(const ClusterTour& tour, RandomStream& rng);

}  // namespace gctsp
