#include <benchmark/benchmark.h>

#include "seriescone/dickson.hpp"
#include "seriescone/fixtures.hpp"
#include "seriescone/support.hpp"

using namespace seriescone;

static void BM_DualSimplicial3(benchmark::State& state) {
  Cone c = Cone::from_generators(3, {{1, -1, 1}, {-1, 1, 1}, {1, 1, -1}});
  for (auto _ : state) benchmark::DoNotOptimize(dual(c));
}
BENCHMARK(BM_DualSimplicial3);

static void BM_Intersect2(benchmark::State& state) {
  Cone a = Cone::from_generators(2, {{1, 0}, {1, 2}});
  Cone b = Cone::from_generators(2, {{0, 1}, {2, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(intersect(a, b));
}
BENCHMARK(BM_Intersect2);

static void BM_HilbertBasisIndex4(benchmark::State& state) {
  Cone c = Cone::from_generators(3, {{1, -1, 1}, {-1, 1, 1}, {1, 1, -1}});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(c));
}
BENCHMARK(BM_HilbertBasisIndex4);

static void BM_ToricIdeal(benchmark::State& state) {
  std::vector<IntVec> basis = {{1, 0}, {1, 1}, {1, 2}, {2, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(toric_ideal(basis));
}
BENCHMARK(BM_ToricIdeal);

static void BM_DicksonHalfplanes(benchmark::State& state) {
  Cone h1 = Cone::from_inequalities(2, {{1, 2}});
  Cone h2 = Cone::from_inequalities(2, {{2, 1}});
  std::vector<DicksonShift> shifts = {{{1, 0}, h1}, {{0, 1}, h2}};
  for (auto _ : state) benchmark::DoNotOptimize(dickson_decompose(2, shifts));
}
BENCHMARK(BM_DicksonHalfplanes);

static void BM_TauResultExC(benchmark::State& state) {
  SupportSpec s = fixture_spec_ex_c();
  for (auto _ : state) benchmark::DoNotOptimize(tau_result(s));
}
BENCHMARK(BM_TauResultExC);

static void BM_NormalizeExMin(benchmark::State& state) {
  SupportSpec s = fixture_spec_ex_min(3);
  for (auto _ : state) benchmark::DoNotOptimize(normalize(s));
}
BENCHMARK(BM_NormalizeExMin);

static void BM_NormalizeExC(benchmark::State& state) {
  SupportSpec s = fixture_spec_ex_c();
  for (auto _ : state) benchmark::DoNotOptimize(normalize(s));
}
BENCHMARK(BM_NormalizeExC);

BENCHMARK_MAIN();
