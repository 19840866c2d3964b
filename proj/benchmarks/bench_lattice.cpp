#include <benchmark/benchmark.h>

#include <random>

#include "toriparam/lattice.hpp"

using namespace toriparam;

static IntMat random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-20, 20);
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  }
  return m;
}

static void BM_Hermite(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  IntMat m = random_matrix(n, n + 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_Hermite)->Arg(2)->Arg(4)->Arg(8);

static void BM_Smith(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  IntMat m = random_matrix(n, n + 2, 8);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_Smith)->Arg(2)->Arg(4)->Arg(8);

static void BM_SaturatedKernel(benchmark::State& state) {
  IntMat m = random_matrix(2, static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(saturated_kernel_basis(m));
}
BENCHMARK(BM_SaturatedKernel)->Arg(5)->Arg(10)->Arg(20);

BENCHMARK_MAIN();
