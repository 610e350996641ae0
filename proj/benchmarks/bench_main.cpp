// Microbenchmarks for the enumeration-heavy cores: grid dense units,
// subspace DBSCAN, micro-object set algebra, assignment matching and the
// levelwise miner.

#include <benchmark/benchmark.h>

#include "subspace/algo/clique.hpp"
#include "subspace/algo/dbscan.hpp"
#include "subspace/algo/mineclus.hpp"
#include "subspace/algo/proclus.hpp"
#include "subspace/cluster.hpp"
#include "subspace/eval/hungarian.hpp"
#include "subspace/eval/measures.hpp"
#include "subspace/generator.hpp"
#include "subspace/rng.hpp"

using namespace subspace;

namespace {

Dataset bench_data(std::size_t n, std::size_t d, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.n_clustered = n * 9 / 10;
  spec.n_noise = n - spec.n_clustered;
  spec.d = d;
  spec.k = 3;
  spec.dims_min = 2;
  spec.dims_max = std::min<std::size_t>(4, d);
  spec.seed = seed;
  return generate(spec).first;
}

void BM_CliqueDenseUnits(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto data = bench_data(n, 6, 1);
  const CliqueParams params(8, 0.05);
  for (auto _ : state) {
    auto result = run_clique_detailed(data, params);
    benchmark::DoNotOptimize(result.dense_units.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CliqueDenseUnits)->Range(200, 2000)->Complexity();

void BM_DbscanSubspace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto data = bench_data(n, 8, 2);
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  for (auto _ : state) {
    auto clusters = run_dbscan(data, {1, 3, 5}, all, 0.1, 8);
    benchmark::DoNotOptimize(clusters.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DbscanSubspace)->Range(200, 2000)->Complexity();

void BM_MicroUnion(benchmark::State& state) {
  Rng rng(3);
  std::vector<SubspaceCluster> clusters;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (int i = 0; i < 12; ++i) {
    auto objects = rng.sample(n, n / 4 + 1);
    std::sort(objects.begin(), objects.end());
    auto dims = rng.sample(16, 5);
    std::sort(dims.begin(), dims.end());
    clusters.emplace_back(std::move(objects), std::move(dims));
  }
  Clustering clustering(std::move(clusters), n, 16);
  for (auto _ : state) {
    auto u = clustering_micro_union(clustering);
    benchmark::DoNotOptimize(u.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MicroUnion)->Range(1000, 64000)->Complexity();

void BM_Hungarian(benchmark::State& state) {
  Rng rng(4);
  const auto m = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<std::int64_t>> weights(m, std::vector<std::int64_t>(m));
  for (auto& row : weights)
    for (auto& w : row) w = static_cast<std::int64_t>(rng.below(100000));
  for (auto _ : state) benchmark::DoNotOptimize(max_weight_assignment(weights));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hungarian)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_MineclusRound(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto data = bench_data(n, 10, 5);
  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;
  const auto min_support = static_cast<std::size_t>(0.2 * static_cast<double>(n));
  for (auto _ : state) {
    auto candidate = detail::mineclus_mine_at_seed(data, remaining, 0, 0.25, 0.1,
                                                   min_support);
    benchmark::DoNotOptimize(candidate.quality);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MineclusRound)->Range(200, 2000)->Complexity();

void BM_Proclus(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto data = bench_data(n, 10, 6);
  const ProclusParams params(3, 4, 7);
  for (auto _ : state) {
    auto result = run_proclus(data, params);
    benchmark::DoNotOptimize(result.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Proclus)->Range(200, 1000)->Complexity();

}  // namespace

BENCHMARK_MAIN();
