#include <benchmark/benchmark.h>

#include <random>

#include "mqtc/bench.hpp"
#include "mqtc/cost.hpp"
#include "mqtc/fast_cost.hpp"
#include "mqtc/fat_tail.hpp"
#include "mqtc/mutation.hpp"
#include "mqtc/ncd.hpp"
#include "mqtc/search.hpp"

using namespace mqtc;

namespace {

DistanceMatrix random_matrix(int n, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      v[static_cast<std::size_t>(i * n + j)] = v[static_cast<std::size_t>(j * n + i)] = u(rng);
    }
  return DistanceMatrix(static_cast<std::size_t>(n), std::move(v));
}

void BM_FastCost(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const Tree t = random_tree(n, rng);
  const auto dm = random_matrix(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(tree_cost_fast(t, dm));
  state.SetComplexityN(n);
}
BENCHMARK(BM_FastCost)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_NaiveCost(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const Tree t = random_tree(n, rng);
  const auto cf = CostFunction::from_distances(random_matrix(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(tree_cost_naive(t, cf));
  state.SetComplexityN(n);
}
BENCHMARK(BM_NaiveCost)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_SimpleMutation(benchmark::State& state) {
  Rng rng(2);
  Tree t = random_tree(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(simple_mutation(t, rng));
}
BENCHMARK(BM_SimpleMutation)->Arg(16)->Arg(64)->Arg(256);

void BM_FatTailSample(benchmark::State& state) {
  Rng rng(3);
  FatTailDistribution::standard();  // builds the shared table outside the timing
  for (auto _ : state) benchmark::DoNotOptimize(sample_k(rng));
}
BENCHMARK(BM_FatTailSample);

void BM_HillClimbArtificial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  const auto inst = generate_artificial(n, 200, rng);
  const auto cf = CostFunction::from_distances(inst.matrix);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    SearchConfig c;
    c.seed = seed++;
    benchmark::DoNotOptimize(hill_climb(cf, c).best_score);
  }
}
BENCHMARK(BM_HillClimbArtificial)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_NcdZlib(benchmark::State& state) {
  Rng rng(5);
  std::uniform_int_distribution<int> letter('a', 'z');
  Bytes x(static_cast<std::size_t>(state.range(0)));
  Bytes y(x.size());
  for (auto& b : x) b = static_cast<std::uint8_t>(letter(rng));
  for (auto& b : y) b = static_cast<std::uint8_t>(letter(rng));
  const ZlibCompressor z;
  for (auto _ : state) benchmark::DoNotOptimize(ncd(x, y, z));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0) * 4);
}
BENCHMARK(BM_NcdZlib)->Arg(1 << 10)->Arg(1 << 14);

}  // namespace
BENCHMARK_MAIN();
