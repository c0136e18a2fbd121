#pragma once

#include "gctsp/clustered_graph.hpp"
#include "gctsp/genotypes.hpp"

namespace gctsp {

/// Spanned-nodes lower level: minimum spanning tree of the m-node subgraph
/// induced by the selection, restricted to finite edges (Kruskal). Returns
/// INFINITE cost and no edges when the induced subgraph is disconnected.
/// Among equal-cost trees any one is acceptable; edges are taken in sorted
/// (cost, endpoints) order, so the result is deterministic.
DecodedSolution mst_on_selection(const ClusteredGraph& g,
                                 const NodeSelection& selection);

/// Tree-representation lower level: the node choice minimizing the summed
/// cost over the tree's cluster edges, by dynamic programming on the tree
/// rooted at cluster 0. Ties are broken by lowest node id at every minimum,
/// visiting children in ascending cluster id; the returned selection is the
/// lexicographically smallest optimum in that root-first visit order, which
/// the brute-force oracle reproduces. INFINITE when some tree edge has no
/// finite realization compatible with the rest.
DecodedSolution best_nodes_for_tree(const ClusteredGraph& g,
                                    const ClusterTree& tree);

/// Tour-representation lower level (cluster optimization): rotate the tour so
/// the smallest cluster (lowest id on ties) comes first, then for each of its
/// nodes run a layered shortest path through the clusters in tour order and
/// back. Ties are broken by lowest start node id, then lowest node id per
/// layer. INFINITE when no finite closed realization exists.
DecodedSolution best_nodes_for_tour(const ClusteredGraph& g,
                                    const ClusterTour& tour);

/// The cluster visit order best_nodes_for_tour uses: the tour rotated so the
/// smallest cluster is first. Shared with the brute-force oracle so both
/// sides break cost ties identically.
std::vector<int> tour_layer_order(const ClusteredGraph& g,
                                  const ClusterTour& tour);

/// The cluster visit order best_nodes_for_tree uses: depth-first preorder
/// from cluster 0 with children ascending. Shared with the brute-force
/// oracle for identical tie-breaking.
std::vector<int> tree_visit_order(int cluster_count, const ClusterTree& tree);

}  // namespace gctsp
