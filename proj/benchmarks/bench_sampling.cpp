#include "kingman/sampling.hpp"
#include "kingman/wright_fisher.hpp"

#include <benchmark/benchmark.h>

using namespace kingman;

namespace {

const Params kHalfOne(make_rational(1, 2), 1);

void BM_SamplePartition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng = make_rng({1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(sample_partition(n, kHalfOne, rng));
}
BENCHMARK(BM_SamplePartition)->Arg(6)->Arg(100)->Arg(1000);

// Cost grows with the number of sticks needed to get below the tail.
void BM_SamplePd(benchmark::State& state) {
  const double tail = 1.0 / static_cast<double>(state.range(0));
  Rng rng = make_rng({2, 0});
  for (auto _ : state) benchmark::DoNotOptimize(sample_pd(kHalfOne, rng, tail));
}
BENCHMARK(BM_SamplePd)->Arg(100)->Arg(1000)->Arg(10000);

void BM_UpdownSteps(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const long steps = 10000;
  for (auto _ : state) {
    double acc = 0;
    simulate_updown(n, steps, kHalfOne, {3, 0}, Partition{n}, [&](const UpdownSample& s) { acc += s.q1; }, steps);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_UpdownSteps)->Arg(100)->Arg(200)->Arg(1000);

void BM_WrightFisherSteps(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const long steps = 10000;
  const auto x0 = FiniteSimplexPoint::barycenter(N);
  for (auto _ : state)
    benchmark::DoNotOptimize(wf_time_average_q1(N, 2.0, 1e-4, steps, 0, {4, 0}, x0));
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_WrightFisherSteps)->Arg(3)->Arg(10);

void BM_DirichletOrdered(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  Rng rng = make_rng({5, 0});
  for (auto _ : state) benchmark::DoNotOptimize(sample_dirichlet_ordered(N, make_rational(1, N), rng));
}
BENCHMARK(BM_DirichletOrdered)->Arg(10)->Arg(200);

}  // namespace
