#include <benchmark/benchmark.h>

#include <filesystem>

#include "gnns/engine.hpp"
#include "gnns/graph.hpp"
#include "gnns/louvain.hpp"
#include "gnns/modularity.hpp"
#include "gnns/random.hpp"
#include "gnns/sbm.hpp"

namespace {

const gnns::Graph& karate() {
  static const gnns::Graph g = gnns::load_graph(
      std::filesystem::path(GNNS_BENCH_DATA_DIR) / "karate.txt", gnns::GraphFormat::kEdgeList);
  return g;
}

gnns::Graph sbm(std::size_t block) {
  gnns::SbmSpec spec;
  spec.block_sizes = {block, block, block};
  spec.p_out = 0.05;
  spec.nu = 2.5;
  spec.seed = 3;
  return gnns::sbm_generate(spec).graph;
}

void BM_Step(benchmark::State& state) {
  const gnns::Graph g = state.range(0) == 0 ? karate() : sbm(static_cast<std::size_t>(state.range(0)));
  const gnns::ModularityMatrix mm = gnns::modularity_matrix(g, true);
  gnns::Rng rng = gnns::derive_rng(1, 0);
  gnns::Candidate c = gnns::init_candidate(g.node_count(), 32, rng);
  gnns::StepWorkspace work;
  for (auto _ : state) {
    gnns::gnns_step(mm, c.attachment, c.params, work);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_Step)->Arg(0)->Arg(100)->Arg(300);

void BM_Binarize(benchmark::State& state) {
  const gnns::ModularityMatrix mm = gnns::modularity_matrix(karate(), true);
  gnns::Rng rng = gnns::derive_rng(1, 0);
  const gnns::Candidate c = gnns::init_candidate(karate().node_count(), 34, rng);
  for (auto _ : state) benchmark::DoNotOptimize(gnns::binarize(c.attachment, mm));
}
BENCHMARK(BM_Binarize);

void BM_Louvain(benchmark::State& state) {
  const gnns::Graph g = sbm(static_cast<std::size_t>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gnns::louvain(g, ++seed));
}
BENCHMARK(BM_Louvain)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
  gnns::ScheduleConfig config;
  config.samples = static_cast<std::size_t>(state.range(0));
  config.max_communities = 34;
  for (auto _ : state) {
    ++config.seed;
    benchmark::DoNotOptimize(gnns::gnns_search(karate(), config));
  }
}
BENCHMARK(BM_Search)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
