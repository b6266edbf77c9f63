#include "oracles.hpp"
#include "support.hpp"

#include "monoseq/embedder.hpp"
#include "monoseq/generators.hpp"
#include "monoseq/sequences.hpp"

#include <benchmark/benchmark.h>

using namespace monoseq;

namespace {

void BM_AllowableOrder(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const int n = static_cast<int>(state.range(0));
  const auto aps = adjust(PathSet(test::sweep_snapshots(n, 10, rng)), 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(allowable_order(aps));
  state.SetComplexityN(n);
}
BENCHMARK(BM_AllowableOrder)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oNSquared);

void BM_CircularSequence(benchmark::State& state) {
  std::mt19937_64 rng(8);
  const PointSet pts = random_general_position(static_cast<int>(state.range(0)), 1000000, rng);
  for (auto _ : state) benchmark::DoNotOptimize(circular_sequence(pts));
}
BENCHMARK(BM_CircularSequence)->RangeMultiplier(2)->Range(8, 64);

void BM_ExpoSpreadLp(benchmark::State& state) {
  const auto lp = expo_spread_lp(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimize(lp.problem, lp.objective));
}
BENCHMARK(BM_ExpoSpreadLp)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_SolveThreeFree(benchmark::State& state) {
  std::mt19937_64 rng(9);
  const int n = static_cast<int>(state.range(0));
  const PointSet pts = random_general_position(n, 1000000, rng);
  const PathSet ps(test::extract_orders(pts, 3, rng, test::random_direction));
  for (auto _ : state) benchmark::DoNotOptimize(solve_three_free(ps));
}
BENCHMARK(BM_SolveThreeFree)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

void BM_TwoPaths(benchmark::State& state) {
  std::mt19937_64 rng(10);
  const int n = static_cast<int>(state.range(0));
  const PathPerm p1 = test::random_path(n, rng);
  const PathPerm p2 = test::random_path(n, rng);
  const VerticalLineConfig cfg({Rat(0), Rat(1)});
  for (auto _ : state) benchmark::DoNotOptimize(embed_two_paths(p1, p2, cfg));
}
BENCHMARK(BM_TwoPaths)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace

BENCHMARK_MAIN();
