#include <benchmark/benchmark.h>

#include "rscrit/rscrit.hpp"

using namespace rscrit;

static void BM_KostantReps(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kostantReps(N, N / 2));
}
BENCHMARK(BM_KostantReps)->DenseRange(4, 12, 2);

static void BM_FindBalanced(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  IntVec b(n);
  for (int i = 0; i < n; ++i) b[i] = 3 * (n - i);
  Weight mu = makeWeight(n, 1, {b});
  Weight mup = makeWeight(n, 1, {IntVec(n, 0)});
  for (auto _ : state) benchmark::DoNotOptimize(findBalanced(mu, mup));
}
BENCHMARK(BM_FindBalanced)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_GammaPoleScan(benchmark::State& state) {
  Weight mu = pureWeightFromParams(4, {{9, 3}}, 0);
  Weight mup = pureWeightFromParams(2, {{6}}, 1);
  const Int radius = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gammaPoleScan(mu, mup, -radius, radius));
}
BENCHMARK(BM_GammaPoleScan)->Arg(32)->Arg(256);

static void BM_BruteDominantMakers(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  IntVec b(n);
  for (int i = 0; i < n; ++i) b[i] = n - 2 * i;
  Weight mu = makeWeight(n, 1, {b});
  Weight mup = makeWeight(2, 1, {{1, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(bruteDominantMakers(mu, mup));
}
BENCHMARK(BM_BruteDominantMakers)->Arg(2)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
