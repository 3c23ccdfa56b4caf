#include "gnns/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "gnns/errors.hpp"
#include "gnns/random.hpp"

namespace gnns {

std::vector<double> BestOfResult::cumulative_best() const {
  std::vector<double> out;
  out.reserve(scores.size());
  double best = -std::numeric_limits<double>::infinity();
  for (double s : scores) {
    best = std::max(best, s);
    out.push_back(best);
  }
  return out;
}

BestOfResult best_of(const PartitionRunner& runner, std::size_t attempts, std::uint64_t seed) {
  if (attempts < 1) throw ConfigError("best-of needs at least one attempt");
  BestOfResult result;
  result.scores.reserve(attempts);
  for (std::size_t k = 0; k < attempts; ++k) {
    Partition p = runner(k == 0 ? seed : derive_seed(seed, k));
    result.scores.push_back(p.score);
    if (k == 0 || p.score > result.best.score) {
      result.best = std::move(p);
      result.best_attempt = k;
    }
  }
  return result;
}

Partition brute_force_partition(const Graph& g, std::size_t max_nodes) {
  const std::size_t n = g.node_count();
  if (n > max_nodes) {
    throw ConfigError("exhaustive search limited to " + std::to_string(max_nodes) +
                      " nodes (graph has " + std::to_string(n) + ")");
  }
  const ModularityMatrix mm = modularity_matrix(g, false);
  const DenseMatrix& q = mm.scores();

  std::vector<int> labels(n, 0);
  std::vector<int> best_labels;
  double best_score = -std::numeric_limits<double>::infinity();

  // Restricted growth strings: node k joins an existing block or opens block
  // `blocks`. The score gained by placing k only involves nodes j < k.
  auto visit = [&](auto&& self, std::size_t k, int blocks, double score) -> void {
    if (k == n) {
      if (score > best_score) {
        best_score = score;
        best_labels = labels;
      }
      return;
    }
    const auto kk = static_cast<Eigen::Index>(k);
    for (int c = 0; c <= blocks; ++c) {
      double added = q(kk, kk);
      for (std::size_t j = 0; j < k; ++j) {
        if (labels[j] == c) {
          const auto jj = static_cast<Eigen::Index>(j);
          added += q(kk, jj) + q(jj, kk);
        }
      }
      labels[k] = c;
      self(self, k + 1, c == blocks ? blocks + 1 : blocks, score + added);
    }
  };
  visit(visit, 0, 0, 0.0);

  Partition result;
  result.labels = std::move(best_labels);
  result.communities = compact_labels(result.labels);
  result.score = partition_modularity(mm, result.labels);
  return result;
}

double nmi(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw DataError("cannot compare labelings of " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()) + " nodes");
  }
  if (a.empty()) throw DataError("cannot compare empty labelings");
  const double total = static_cast<double>(a.size());

  std::map<int, double> count_a, count_b;
  std::map<std::pair<int, int>, double> joint;
  for (std::size_t i = 0; i < a.size(); ++i) {
    count_a[a[i]] += 1.0;
    count_b[b[i]] += 1.0;
    joint[{a[i], b[i]}] += 1.0;
  }
  auto entropy = [total](const std::map<int, double>& counts) {
    double h = 0.0;
    for (const auto& [label, c] : counts) h -= (c / total) * std::log(c / total);
    return h;
  };
  const double ha = entropy(count_a);
  const double hb = entropy(count_b);
  if (count_a.size() == 1 && count_b.size() == 1) return 1.0;
  if (count_a.size() == 1 || count_b.size() == 1) return 0.0;

  double mutual = 0.0;
  for (const auto& [key, c] : joint) {
    mutual += (c / total) * std::log(total * c / (count_a[key.first] * count_b[key.second]));
  }
  const double value = 2.0 * mutual / (ha + hb);
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace gnns
