#include <benchmark/benchmark.h>

#include "obnox/approx.hpp"
#include "obnox/fpt.hpp"
#include "obnox/generators.hpp"
#include "obnox/oracle.hpp"
#include "obnox/planar.hpp"

using namespace obnox;

namespace {

Instance plane(int nv, int nc, int k, int lambda, std::uint64_t seed) {
  return gen_random_euclidean(nv, nc, 2, k, lambda, seed);
}

void BM_OracleOptimize(benchmark::State& state) {
  const Instance inst = plane(static_cast<int>(state.range(0)),
                              static_cast<int>(state.range(1)), 3, 1, 42);
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle_optimize(inst).optimal_value);
}
BENCHMARK(BM_OracleOptimize)->Args({8, 8})->Args({10, 12})->Args({12, 16});

void BM_PlanarOptimize(benchmark::State& state) {
  const Instance inst = plane(static_cast<int>(state.range(0)),
                              static_cast<int>(state.range(1)), 3, 1, 42);
  for (auto _ : state)
    benchmark::DoNotOptimize(planar_optimize(inst).first);
}
BENCHMARK(BM_PlanarOptimize)->Args({8, 8})->Args({12, 10})->Args({16, 12});

void BM_QuarterApprox(benchmark::State& state) {
  const Instance inst = plane(static_cast<int>(state.range(0)),
                              static_cast<int>(state.range(1)), 4, 1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(quarter_approx(inst).value);
}
BENCHMARK(BM_QuarterApprox)->Args({16, 16})->Args({32, 32})->Args({64, 64});

void BM_FptasOptimize(benchmark::State& state) {
  const Instance inst = plane(6, static_cast<int>(state.range(0)), 4, 2, 7);
  const double eps = 1.0 / static_cast<double>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(fptas_optimize(inst, eps).value);
}
BENCHMARK(BM_FptasOptimize)->Args({10, 2})->Args({10, 4})->Args({12, 4});

void BM_HittingReduction(benchmark::State& state) {
  const SetSystem sys = gen_random_set_system(
      static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 3,
      1, 11);
  for (auto _ : state) {
    auto [inst, gt] = gen_hitting_set(sys);
    benchmark::DoNotOptimize(inst.num_candidates());
  }
}
BENCHMARK(BM_HittingReduction)->Arg(5)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
