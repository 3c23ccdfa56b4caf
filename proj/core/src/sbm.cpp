#include "gnns/sbm.hpp"

#include <string>

#include "gnns/errors.hpp"
#include "gnns/random.hpp"

namespace gnns {

void SbmSpec::validate() const {
  if (block_sizes.empty()) throw ConfigError("SBM needs at least one block");
  for (std::size_t s : block_sizes) {
    if (s < 1) throw ConfigError("SBM block sizes must be at least 1");
  }
  if (!(p_out > 0.0 && p_out <= 1.0)) {
    throw ConfigError("p_out must lie in (0, 1] (got " + std::to_string(p_out) + ")");
  }
  if (!(nu >= 1.0)) throw ConfigError("nu must be at least 1 (got " + std::to_string(nu) + ")");
  if (nu * p_out > 1.0) {
    throw ConfigError("nu * p_out = " + std::to_string(nu * p_out) + " exceeds 1");
  }
}

namespace {

LabeledGraph draw(const std::vector<int>& membership, double p_in, double p_out, Rng& rng) {
  const std::size_t n = membership.size();
  std::vector<Edge> edges;
  std::bernoulli_distribution inside(p_in), across(p_out);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool link = membership[i] == membership[j] ? inside(rng) : across(rng);
      if (link) edges.push_back({i, j, 1.0});
    }
  }
  if (edges.empty()) throw DataError("sampled SBM graph has no edges");
  return {Graph::from_edges(n, edges, Directedness::kUndirected), membership};
}

std::vector<int> planted(const SbmSpec& spec) {
  std::vector<int> membership;
  for (std::size_t b = 0; b < spec.block_sizes.size(); ++b) {
    membership.insert(membership.end(), spec.block_sizes[b], static_cast<int>(b));
  }
  return membership;
}

}  // namespace

LabeledGraph sbm_generate(const SbmSpec& spec) {
  spec.validate();
  Rng rng = derive_rng(spec.seed, 0);
  return draw(planted(spec), spec.p_in(), spec.p_out, rng);
}

std::vector<LabeledGraph> sbm_drift_series(const SbmSpec& spec, std::size_t layers, double drift) {
  spec.validate();
  if (!(drift >= 0.0 && drift <= 1.0)) throw ConfigError("drift must lie in [0, 1]");
  const auto blocks = static_cast<int>(spec.block_sizes.size());
  Rng rng = derive_rng(spec.seed, 0);
  std::vector<int> membership = planted(spec);
  std::bernoulli_distribution moves(drift);
  std::vector<LabeledGraph> series;
  series.reserve(layers);
  for (std::size_t layer = 0; layer < layers; ++layer) {
    if (layer > 0 && blocks > 1) {
      for (int& b : membership) {
        if (!moves(rng)) continue;
        int shift = 1 + static_cast<int>(uniform_index(rng, static_cast<std::size_t>(blocks - 1)));
        b = (b + shift) % blocks;
      }
    }
    series.push_back(draw(membership, spec.p_in(), spec.p_out, rng));
  }
  return series;
}

}  // namespace gnns
