#include <benchmark/benchmark.h>

#include "toriparam/decomposition.hpp"
#include "toriparam/poly_text.hpp"
#include "toriparam/resolution.hpp"

using namespace toriparam;

static LatticePolytope pentagon() {
  return polytope_from_vertices(2, {make_vec({1, 1}), make_vec({-1, 1}), make_vec({-1, 0}), make_vec({0, -1}),
                                    make_vec({1, -1})});
}

static void BM_Compose(benchmark::State& state) {
  auto p = pentagon();
  auto sys = build_P_Delta(p);
  auto f = parse_tuple("(u^2 + 1, u - 1, u + 2, 3*u, u^3 - 2)", VarKind::Param);
  for (auto _ : state) benchmark::DoNotOptimize(compose(sys, f));
}
BENCHMARK(BM_Compose);

static void BM_DecomposeCurve(benchmark::State& state) {
  auto p = pentagon();
  auto sys = build_P_Delta(p);
  Fan fan = normal_fan(p);
  auto h = compose(sys, parse_tuple("(u^2 + 1, u - 1, u + 2, 3*u, u^3 - 2)", VarKind::Param)).raw;
  for (auto _ : state) benchmark::DoNotOptimize(decompose_curve(h, sys, fan));
}
BENCHMARK(BM_DecomposeCurve);

static void BM_Resolution(benchmark::State& state) {
  long k = state.range(0);
  auto p = polytope_from_vertices(2, {make_vec({0, 0}), make_vec({k, 1}), make_vec({0, 1}), make_vec({-k, -1})});
  for (auto _ : state) {
    auto rf = minimal_resolution_2d(normal_fan(p));
    benchmark::DoNotOptimize(virtual_offsets(p, rf));
  }
}
BENCHMARK(BM_Resolution)->Arg(3)->Arg(7)->Arg(15);

BENCHMARK_MAIN();
