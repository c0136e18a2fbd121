#pragma once

#include "gctsp/clustered_graph.hpp"
#include "gctsp/genotypes.hpp"

namespace gctsp {

/// Exhaustive minimum over all node selections for a fixed cluster tree.
/// Cost ties are broken exactly like best_nodes_for_tree (lexicographically
/// smallest selection in the tree's root-first visit order), so the two are
/// comparable selection-for-selection. Guard: the selection space must not
/// exceed 10^6.
DecodedSolution brute_nodes_for_tree(const ClusteredGraph& g,
                                     const ClusterTree& tree);

/// Exhaustive minimum over all node selections for a fixed cluster tour, with
/// best_nodes_for_tour's tie-breaking (lexicographically smallest in the
/// rotated layer order). Guard: selection space <= 10^6.
DecodedSolution brute_nodes_for_tour(const ClusteredGraph& g,
                                     const ClusterTour& tour);

/// Certified global GMSTP optimum: every selection times Kruskal. The
/// returned selection is the lexicographically smallest optimal one in
/// cluster-id order. Guard: selection space <= 10^6.
DecodedSolution brute_force_gmstp(const ClusteredGraph& g);

/// Certified global GTSP optimum: every tour up to rotation and reversal,
/// each decoded by exhaustive selection enumeration. Guard:
/// (m-1)!/2 * selection space <= 10^7.
DecodedSolution brute_force_gtsp(const ClusteredGraph& g);

}  // namespace gctsp
