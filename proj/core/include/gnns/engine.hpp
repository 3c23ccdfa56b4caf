#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gnns/modularity.hpp"
#include "gnns/random.hpp"

namespace gnns {

/// Activation parameters of the recurrent update. The balancing condition
/// f0 + f1 + f2 = 1 fixes f2, so it is never stored.
struct HyperParams {
  double f0 = -0.5;  ///< constant decay, in [-1, 0]
  double f1 = 0.5;   ///< self-retention, in [0, 1]

  double f2() const noexcept { return 1.0 - f1 - f0; }

  friend bool operator==(const HyperParams&, const HyperParams&) = default;
};

struct Candidate {
  AttachmentMatrix attachment;
  HyperParams params;
  /// Modularity of binarize(attachment) at the last evaluation.
  double score = -1.0;
  /// Labels of that binarization (empty before the first evaluation).
  std::vector<int> labels;
  /// Stream index the candidate was initialised from.
  std::uint64_t stream = 0;
};

struct ScheduleConfig {
  std::size_t samples = 100;
  std::array<int, 3> stage_iters{10, 10, 30};
  /// Survivors after stage k are floor(samples / survivor_divisors[k]).
  std::array<std::size_t, 2> survivor_divisors{3, 9};
  /// Community cap m; 0 selects min(n, 32).
  std::size_t max_communities = 0;
  std::uint64_t seed = 0;
  /// Worker threads for candidate evaluation; 0 uses the hardware count.
  std::size_t threads = 1;

  /// Throws ConfigError when samples < 3, an iteration count is < 1, a
  /// divisor is 0, or an explicit cap is < 2.
  void validate() const;
  std::size_t communities_for(std::size_t nodes) const;
};

/// Rows drawn uniformly then normalised; f0 ~ U[-1, 0], f1 ~ U[0, 1].
Candidate init_candidate(std::size_t nodes, std::size_t communities, Rng& rng);

/// Scratch buffers reused across steps of one candidate.
struct StepWorkspace {
  DenseMatrix aggregate;
};

/// One synchronous update of every row:
///   c~(i, p) = ReLU(f1 c(i, p) + f2 A(i, p) / t(i) + f0),  A = Q C,
///   t(i) = max(max_p A(i, p), 1e-12),
/// followed by row normalisation. A row that is zero after the ReLU becomes
/// uniform.
void gnns_step(const ModularityMatrix& mm, AttachmentMatrix& c, const HyperParams& params,
               StepWorkspace& work);

Candidate gnns_step(const ModularityMatrix& mm, Candidate candidate);

inline constexpr double kNormalizerFloor = 1e-12;

/// Advances every candidate by `iters` steps and refreshes score/labels from
/// binarize. `threads` as in ScheduleConfig. Throws ConfigError if iters < 1.
void run_stage(const ModularityMatrix& mm, std::vector<Candidate>& population, int iters,
               std::size_t threads = 1);

/// Survivors first, unchanged; each extra member copies the attachment of one
/// random survivor and the parameters of an independently drawn one.
std::vector<Candidate> shuffle_population(std::vector<Candidate> survivors, std::size_t target,
                                          Rng& rng);

/// Indices of the `keep` best candidates, by score then lower index.
std::vector<std::size_t> select_best(const std::vector<Candidate>& population, std::size_t keep);

struct SearchResult {
  Partition partition;
  /// Attachment and parameters of the candidate that produced `partition`.
  Candidate best;
  /// Best score seen so far, recorded after each stage.
  std::vector<double> stage_best;
};

/// Staged population search on a zero-diagonal matrix:
/// S candidates, stage 1, keep S/3, refill to S, stage 2, keep S/9, refill to
/// S/3, stage 3. Returns the best binarized partition seen anywhere.
SearchResult gnns_search(const ModularityMatrix& mm, const ScheduleConfig& config);

/// Builds the zero-diagonal matrix of `g` and runs gnns_search.
SearchResult gnns_search(const Graph& g, const ScheduleConfig& config);

}  // namespace gnns
