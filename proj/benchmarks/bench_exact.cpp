#include "kingman/ewens_pitman.hpp"
#include "kingman/generator.hpp"
#include "kingman/partitions.hpp"
#include "kingman/updown.hpp"

#include <benchmark/benchmark.h>

using namespace kingman;

namespace {

const Params kHalfOne(make_rational(1, 2), 1);

void BM_EnumerateLevel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_level(n));
  state.counters["states"] = static_cast<double>(partition_count(n).get_d());
}
BENCHMARK(BM_EnumerateLevel)->Arg(10)->Arg(20)->Arg(30);

void BM_Measure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(measure(n, kHalfOne));
}
BENCHMARK(BM_Measure)->Arg(8)->Arg(15)->Arg(25);

void BM_TransitionMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(transition_matrix(n, kHalfOne));
}
BENCHMARK(BM_TransitionMatrix)->Arg(6)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_TriangularActionResidual(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_triangular_action(n, {2, 2}, kHalfOne));
}
BENCHMARK(BM_TriangularActionResidual)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ChainSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chain_spectrum(n, kHalfOne));
}
BENCHMARK(BM_ChainSpectrum)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_GeneratorMatrix(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generator_matrix(m, kHalfOne));
}
BENCHMARK(BM_GeneratorMatrix)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FiniteGenerator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(finite_generator(n, 3, kHalfOne));
}
BENCHMARK(BM_FiniteGenerator)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_PdMoment(benchmark::State& state) {
  const Partition lambda{4, 3, 2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(pd_moment(lambda, kHalfOne));
}
BENCHMARK(BM_PdMoment);

}  // namespace
