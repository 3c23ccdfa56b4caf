#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gnns/graph.hpp"
#include "gnns/modularity.hpp"

namespace gnns {

/// A stochastic partitioning procedure parameterised by its seed.
using PartitionRunner = std::function<Partition(std::uint64_t seed)>;

struct BestOfResult {
  Partition best;
  std::size_t best_attempt = 0;
  std::vector<double> scores;  ///< one per attempt, in attempt order

  /// Running maximum of `scores`.
  std::vector<double> cumulative_best() const;
};

/// Runs `runner` once with `seed`, then with derive_seed(seed, k) for
/// 1 <= k < attempts, and keeps the highest score (earliest attempt on ties).
/// The first j attempts are the same for every attempts >= j. Throws ConfigError if attempts < 1.
BestOfResult best_of(const PartitionRunner& runner, std::size_t attempts, std::uint64_t seed);

/// Exhaustive maximum over all set partitions (restricted growth strings).
/// Ties keep the first partition in enumeration order. Throws ConfigError when
/// node_count > max_nodes.
Partition brute_force_partition(const Graph& g, std::size_t max_nodes = 12);

/// Normalised mutual information 2 I(A;B) / (H(A) + H(B)), natural log.
/// Two single-community labelings give 1; exactly one gives 0.
/// Throws DataError on a length mismatch.
double nmi(std::span<const int> a, std::span<const int> b);

}  // namespace gnns
