#pragma once

#include "gctsp/genotypes.hpp"

namespace gctsp {

/// Similarity of a cluster tour to the numeric cyclic order: the number of
/// positions whose successor in the tour is the numeric successor mod m.
/// m for the identity order, 0 when no cluster is followed by its successor.
int similarity(const ClusterTour& tour);

/// Undirected variant: positions whose tour neighbour is a numeric neighbour
/// (+1 or -1 mod m). This counts the consecutive-pair edges a tour can
/// realize, which is what the trap-instance cost law depends on; it differs
/// from similarity() on tours that traverse part of the cycle backwards.
int cyclic_adjacency_count(const ClusterTour& tour);

/// Number of edges of the reference tree missing from the candidate tree.
/// Diagnostic only.
int tree_distance(const ClusterTree& candidate, const ClusterTree& reference);

}  // namespace gctsp
