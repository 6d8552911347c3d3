#include <benchmark/benchmark.h>

#include "tlir/acyclic.hpp"
#include "tlir/cactus.hpp"
#include "tlir/generators.hpp"
#include "tlir/subcubic.hpp"
#include "tlir/sweep.hpp"

using namespace tlir;

static void BM_SweepSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(n).max_tlir);
}
BENCHMARK(BM_SweepSerial)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_SweepParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_parallel(n).max_tlir);
}
BENCHMARK(BM_SweepParallel)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_Cactus(benchmark::State& state) {
  Rng rng(1);
  TotalGraph g = random_cactus(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(cactus_tlir2(g));
}
BENCHMARK(BM_Cactus)->Arg(10)->Arg(40)->Arg(160)->Unit(benchmark::kMicrosecond);

static void BM_Subcubic(benchmark::State& state) {
  Rng rng(2);
  TotalGraph g = random_subcubic(static_cast<std::size_t>(state.range(0)), 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(subcubic_tlir2(g));
}
BENCHMARK(BM_Subcubic)->Arg(10)->Arg(30)->Unit(benchmark::kMicrosecond);

static void BM_MaximalOuterplanar(benchmark::State& state) {
  Rng rng(3);
  TotalGraph g = random_maximal_outerplanar(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(outerplanar_tlir3(g));
}
BENCHMARK(BM_MaximalOuterplanar)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
