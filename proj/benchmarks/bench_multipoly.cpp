#include <benchmark/benchmark.h>

#include "toriparam/multipoly.hpp"
#include "toriparam/poly_text.hpp"

using namespace toriparam;

static MultiPoly uv(const char* text) { return parse_polynomial(text, VarKind::Param, 2); }

static void BM_GcdBivariate(benchmark::State& state) {
  MultiPoly g = uv("(u^2 + v^2 + 1)*(u - 3*v + 2)");
  MultiPoly p = g * pow(uv("u*v + 5"), 3);
  MultiPoly q = g * pow(uv("u - v^2"), 3);
  for (auto _ : state) benchmark::DoNotOptimize(gcd_multi(p, q));
}
BENCHMARK(BM_GcdBivariate);

static void BM_FactorUnivariate(benchmark::State& state) {
  MultiPoly x = MultiPoly::variable(1, 0);
  MultiPoly p = MultiPoly::constant(1, 1);
  for (long k = 1; k <= state.range(0); ++k) p *= x * x + MultiPoly::constant(1, k);
  for (auto _ : state) benchmark::DoNotOptimize(factor_univariate(p));
}
BENCHMARK(BM_FactorUnivariate)->Arg(2)->Arg(4)->Arg(6);

static void BM_ParseRender(benchmark::State& state) {
  std::string text = render(pow(uv("u + 2*v - 3/2"), 8), VarKind::Param);
  for (auto _ : state) benchmark::DoNotOptimize(render(parse_polynomial(text, VarKind::Param, 2), VarKind::Param));
}
BENCHMARK(BM_ParseRender);

BENCHMARK_MAIN();
