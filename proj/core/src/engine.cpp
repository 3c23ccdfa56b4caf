#include "gnns/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "gnns/errors.hpp"

namespace gnns {

namespace {

std::size_t resolve_threads(std::size_t requested, std::size_t work) {
  std::size_t threads = requested == 0 ? std::thread::hardware_concurrency() : requested;
  return std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(work, 1));
}

// Runs body(k) for k in [0, count). Work is split into contiguous blocks, so
// bodies that only touch item k are order-independent.
template <typename Body>
void parallel_for(std::size_t count, std::size_t threads, Body&& body) {
  threads = resolve_threads(threads, count);
  if (threads == 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  const std::size_t block = (count + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t begin = t * block;
    const std::size_t end = std::min(count, begin + block);
    if (begin >= end) break;
    workers.emplace_back([&body, begin, end] {
      for (std::size_t k = begin; k < end; ++k) body(k);
    });
  }
}

}  // namespace

void ScheduleConfig::validate() const {
  if (samples < 3) {
    throw ConfigError("sample count must be at least 3 (got " + std::to_string(samples) + ")");
  }
  for (int iters : stage_iters) {
    if (iters < 1) throw ConfigError("every stage needs at least one iteration");
  }
  for (std::size_t d : survivor_divisors) {
    if (d == 0) throw ConfigError("survivor divisor must be positive");
  }
  if (max_communities == 1) {
    throw ConfigError("community cap must be at least 2");
  }
}

std::size_t ScheduleConfig::communities_for(std::size_t nodes) const {
  if (max_communities != 0) return max_communities;
  return std::max<std::size_t>(2, std::min<std::size_t>(nodes, 32));
}

Candidate init_candidate(std::size_t nodes, std::size_t communities, Rng& rng) {
  if (nodes < 2 || communities < 2) {
    throw ConfigError("a candidate needs at least 2 nodes and 2 communities");
  }
  DenseMatrix values(static_cast<Eigen::Index>(nodes), static_cast<Eigen::Index>(communities));
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    double sum = 0.0;
    for (Eigen::Index p = 0; p < values.cols(); ++p) {
      values(i, p) = uniform01(rng);
      sum += values(i, p);
    }
    if (sum > 0.0) {
      values.row(i) /= sum;
    } else {
      values.row(i).setConstant(1.0 / static_cast<double>(communities));
    }
  }
  Candidate c;
  c.attachment = AttachmentMatrix(std::move(values));
  c.params.f0 = -uniform01(rng);
  c.params.f1 = uniform01(rng);
  return c;
}

void gnns_step(const ModularityMatrix& mm, AttachmentMatrix& c, const HyperParams& params,
               StepWorkspace& work) {
  DenseMatrix& x = c.values();
  const Eigen::Index n = x.rows();
  const Eigen::Index m = x.cols();
  if (static_cast<std::size_t>(n) != mm.size()) {
    throw DataError("attachment and modularity matrix sizes differ");
  }
  work.aggregate.noalias() = mm.scores() * x;

  const double f0 = params.f0;
  const double f1 = params.f1;
  const double f2 = params.f2();
  const double uniform = 1.0 / static_cast<double>(m);
  for (Eigen::Index i = 0; i < n; ++i) {
    auto a = work.aggregate.row(i);
    auto row = x.row(i);
    double t = a.maxCoeff();
    if (!(t > kNormalizerFloor)) t = kNormalizerFloor;
    double sum = 0.0;
    for (Eigen::Index p = 0; p < m; ++p) {
      double v = f1 * row(p) + f2 * (a(p) / t) + f0;
      v = v > 0.0 ? v : 0.0;
      row(p) = v;
      sum += v;
    }
    if (sum > 0.0 && std::isfinite(sum)) {
      row /= sum;
    } else {
      row.setConstant(uniform);
    }
  }
}

Candidate gnns_step(const ModularityMatrix& mm, Candidate candidate) {
  StepWorkspace work;
  gnns_step(mm, candidate.attachment, candidate.params, work);
  return candidate;
}

void run_stage(const ModularityMatrix& mm, std::vector<Candidate>& population, int iters,
               std::size_t threads) {
  if (iters < 1) throw ConfigError("a stage needs at least one iteration");
  parallel_for(population.size(), threads, [&](std::size_t k) {
    Candidate& c = population[k];
    StepWorkspace work;
    for (int it = 0; it < iters; ++it) gnns_step(mm, c.attachment, c.params, work);
    Partition p = binarize(c.attachment, mm);
    c.score = p.score;
    c.labels = std::move(p.labels);
  });
}

std::vector<Candidate> shuffle_population(std::vector<Candidate> survivors, std::size_t target,
                                          Rng& rng) {
  if (survivors.empty()) throw ConfigError("cannot refill an empty population");
  if (target < survivors.size()) throw ConfigError("refill target below survivor count");
  const std::size_t count = survivors.size();
  survivors.reserve(target);
  while (survivors.size() < target) {
    const std::size_t donor = uniform_index(rng, count);
    const std::size_t tuner = uniform_index(rng, count);
    Candidate child = survivors[donor];
    child.params = survivors[tuner].params;
    survivors.push_back(std::move(child));
  }
  return survivors;
}

std::vector<std::size_t> select_best(const std::vector<Candidate>& population, std::size_t keep) {
  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return population[a].score > population[b].score;
  });
  order.resize(std::min(keep, order.size()));
  return order;
}

namespace {

void track_best(const std::vector<Candidate>& population, SearchResult& result) {
  for (const Candidate& c : population) {
    if (result.partition.labels.empty() || c.score > result.partition.score) {
      result.partition.labels = c.labels;
      result.partition.score = c.score;
      result.best = c;
    }
  }
  result.stage_best.push_back(result.partition.score);
}

std::vector<Candidate> take(std::vector<Candidate>& population,
                            const std::vector<std::size_t>& indices) {
  std::vector<Candidate> out;
  out.reserve(indices.size());
  for (std::size_t k : indices) out.push_back(std::move(population[k]));
  return out;
}

}  // namespace

SearchResult gnns_search(const ModularityMatrix& mm, const ScheduleConfig& config) {
  config.validate();
  const std::size_t n = mm.size();
  if (n < 2) throw ConfigError("search needs at least 2 nodes");
  const std::size_t m = config.communities_for(n);
  const std::size_t s = config.samples;
  const std::size_t keep1 = std::max<std::size_t>(1, s / config.survivor_divisors[0]);
  const std::size_t keep2 = std::max<std::size_t>(1, s / config.survivor_divisors[1]);
  const std::size_t final_size = std::max(keep2, keep1);

  std::vector<Candidate> population(s);
  parallel_for(s, config.threads, [&](std::size_t k) {
    Rng rng = derive_rng(config.seed, k);
    population[k] = init_candidate(n, m, rng);
    population[k].stream = k;
  });
  // Stream s is reserved for shuffling, after the per-candidate streams.
  Rng shuffle_rng = derive_rng(config.seed, s);

  SearchResult result;
  run_stage(mm, population, config.stage_iters[0], config.threads);
  track_best(population, result);

  auto survivors = take(population, select_best(population, keep1));
  population = shuffle_population(std::move(survivors), s, shuffle_rng);
  run_stage(mm, population, config.stage_iters[1], config.threads);
  track_best(population, result);

  survivors = take(population, select_best(population, keep2));
  population = shuffle_population(std::move(survivors), final_size, shuffle_rng);
  run_stage(mm, population, config.stage_iters[2], config.threads);
  track_best(population, result);

  result.partition.communities = compact_labels(result.partition.labels);
  return result;
}

SearchResult gnns_search(const Graph& g, const ScheduleConfig& config) {
  return gnns_search(modularity_matrix(g, true), config);
}

}  // namespace gnns
