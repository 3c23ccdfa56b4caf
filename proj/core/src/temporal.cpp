#include "gnns/temporal.hpp"

#include <string>

#include "gnns/errors.hpp"

namespace gnns {

double TemporalResult::total_seconds() const {
  double total = warmup_seconds;
  for (const LayerResult& layer : layers) total += layer.seconds;
  return total;
}

TemporalResult temporal_search(std::span<const Graph> layers, const ScheduleConfig& config,
                               const WarmupSpec& warmup, int fine_tune_iters,
                               const Clock& clock) {
  if (layers.empty()) throw ConfigError("temporal search needs at least one layer");
  if (fine_tune_iters < 1) throw ConfigError("fine-tuning needs at least one iteration");
  config.validate();

  const Graph& first = layers.front();
  for (std::size_t k = 1; k < layers.size(); ++k) {
    if (layers[k].node_count() != first.node_count() ||
        layers[k].node_labels() != first.node_labels()) {
      throw DataError("layer " + std::to_string(k) + " does not share the node space of layer 0");
    }
  }

  std::size_t tuned_from = 0;
  std::span<const Graph> warmup_layers = layers;
  if (warmup.kind == WarmupSpec::Kind::kFirstK) {
    if (warmup.k == 0) throw ConfigError("warm-up set is empty");
    if (warmup.k >= layers.size()) {
      throw ConfigError("warm-up uses " + std::to_string(warmup.k) + " of " +
                        std::to_string(layers.size()) + " layers, leaving none to fine-tune");
    }
    warmup_layers = layers.first(warmup.k);
    tuned_from = warmup.k;
  }

  TemporalResult result;
  double start = clock();
  const Graph warm = warmup_layers.size() == 1 ? warmup_layers.front() : aggregate(warmup_layers);
  result.warmup = gnns_search(warm, config);
  result.warmup_seconds = clock() - start;

  const std::size_t m = result.warmup.best.attachment.communities();
  const HyperParams params = result.warmup.best.params;
  std::vector<int> previous = result.warmup.partition.labels;
  StepWorkspace work;

  for (std::size_t k = tuned_from; k < layers.size(); ++k) {
    start = clock();
    const ModularityMatrix mm = modularity_matrix(layers[k], true);
    AttachmentMatrix c = AttachmentMatrix::from_labels(previous, m);
    for (int it = 0; it < fine_tune_iters; ++it) gnns_step(mm, c, params, work);
    Partition p = binarize(c, mm);
    const double elapsed = clock() - start;
    previous = p.labels;
    result.layers.push_back({k, std::move(p), elapsed});
  }
  return result;
}

}  // namespace gnns
