#pragma once

#include <cstdint>

#include "gnns/graph.hpp"
#include "gnns/modularity.hpp"

namespace gnns {

/// Two-phase Louvain (local moves, then community aggregation) for undirected
/// graphs. Nodes are visited in a seeded random order each pass. The hierarchy
/// is restarted from the flat partition until a base-level pass makes no move,
/// so the result is a local optimum under single-node moves.
///
/// Throws ConfigError for directed input.
Partition louvain(const Graph& g, std::uint64_t seed);

}  // namespace gnns
