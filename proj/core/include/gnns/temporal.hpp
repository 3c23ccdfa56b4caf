#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gnns/engine.hpp"
#include "gnns/graph.hpp"
#include "gnns/timing.hpp"

namespace gnns {

/// Which layers feed the warm-up search.
struct WarmupSpec {
  enum class Kind {
    kAggregate,  ///< sum of all layers; every layer is then fine-tuned
    kFirstK,     ///< sum of layers [0, k); layers [k, L) are fine-tuned
  };
  Kind kind = Kind::kAggregate;
  std::size_t k = 0;
};

struct LayerResult {
  std::size_t layer = 0;
  Partition partition;
  double seconds = 0.0;
};

struct TemporalResult {
  SearchResult warmup;
  double warmup_seconds = 0.0;
  std::vector<LayerResult> layers;

  double total_seconds() const;
};

/// Warm-up search on the aggregated warm-up graph, then for each remaining
/// layer in order: seed one candidate with the previous layer's partition as a
/// binary attachment and the warm-up winner's parameters, run
/// `fine_tune_iters` steps on that layer's zero-diagonal matrix, binarize.
///
/// All layers must share one node space. Throws DataError on a mismatch and
/// ConfigError for an empty layer list, k == 0, k >= L, or fine_tune_iters < 1.
/// `clock` times the optimisation only.
TemporalResult temporal_search(std::span<const Graph> layers, const ScheduleConfig& config,
                               const WarmupSpec& warmup, int fine_tune_iters = 20,
                               const Clock& clock = steady_clock());

}  // namespace gnns
