#pragma once

#include "gctsp/clustered_graph.hpp"
#include "gctsp/genotypes.hpp"
#include "gctsp/random_stream.hpp"

namespace gctsp {

/// Exactly uniform spanning tree of the cluster graph by Wilson's
/// loop-erased random walk algorithm. Throws std::invalid_argument when the
/// graph is disconnected (no generalized spanning tree exists).
ClusterTree uniform_spanning_tree(const ClusterGraph& h, RandomStream& rng);

}  // namespace gctsp
