#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gnns/graph.hpp"

namespace gnns {

/// Planted partition: pairs inside a block connect with nu * p_out, pairs across
/// blocks with p_out.
struct SbmSpec {
  std::vector<std::size_t> block_sizes;
  double p_out = 0.05;
  double nu = 2.0;
  std::uint64_t seed = 0;

  double p_in() const noexcept { return nu * p_out; }
  /// Throws ConfigError unless 0 < p_out <= 1, nu >= 1, nu * p_out <= 1 and
  /// every block is non-empty.
  void validate() const;
};

struct LabeledGraph {
  Graph graph;
  std::vector<int> truth;
};

/// Undirected simple graph with unit weights.
LabeledGraph sbm_generate(const SbmSpec& spec);

/// Temporal series: memberships start as the planted blocks; before each layer
/// after the first, every node independently moves to a different random block
/// with probability `drift`. Each layer is an independent draw given the
/// memberships.
std::vector<LabeledGraph> sbm_drift_series(const SbmSpec& spec, std::size_t layers, double drift);

}  // namespace gnns
