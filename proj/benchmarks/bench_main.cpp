#include <benchmark/benchmark.h>

#include "polychow/polychow.hpp"

using namespace polychow;

namespace {

void BM_EhrhartEval(benchmark::State& state) {
  const Polygon p = catalog::blow_up_three_points();
  for (auto _ : state) benchmark::DoNotOptimize(ehrhart_eval(p, state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EhrhartEval)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_SumPoints(benchmark::State& state) {
  const Polygon p = catalog::blow_up_three_points();
  for (auto _ : state) benchmark::DoNotOptimize(sum_points(p, state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SumPoints)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_ChowPoly(benchmark::State& state) {
  const Polygon p = catalog::hirzebruch(2, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(chow_poly(p));
}
BENCHMARK(BM_ChowPoly);

void BM_ChopCorners(benchmark::State& state) {
  const Polygon base = catalog::blow_up_five_points();
  const auto cuts = catalog::six_point_cuts();
  for (auto _ : state) benchmark::DoNotOptimize(chop_corners(base, cuts));
}
BENCHMARK(BM_ChopCorners);

void BM_BlowupFormula(benchmark::State& state) {
  const Decomposition d = chop_corners(catalog::blow_up_three_points(), catalog::four_point_cuts());
  for (auto _ : state) benchmark::DoNotOptimize(chow_after_blowup(d));
}
BENCHMARK(BM_BlowupFormula);

void BM_VerifyBlowup(benchmark::State& state) {
  const Decomposition d = chop_corners(catalog::blow_up_three_points(), catalog::four_point_cuts());
  for (auto _ : state) benchmark::DoNotOptimize(verify_blowup_theorem(d, state.range(0)));
}
BENCHMARK(BM_VerifyBlowup)->DenseRange(2, 8, 3);

void BM_HirzebruchGrid(benchmark::State& state) {
  const long long n = state.range(0);
  for (auto _ : state) {
    for (long long a = 1; a <= n; ++a)
      for (long long b = 1; b <= n; ++b)
        for (long long m = 1; m <= n; ++m) benchmark::DoNotOptimize(chow_poly(catalog::hirzebruch(a, b, m)));
  }
}
BENCHMARK(BM_HirzebruchGrid)->Arg(2)->Arg(4);

void BM_MukaiClassify(benchmark::State& state) {
  const PointConfiguration pts = catalog::five_blown_up_points();
  for (auto _ : state) benchmark::DoNotOptimize(mukai_classify(pts));
}
BENCHMARK(BM_MukaiClassify);

}  // namespace

BENCHMARK_MAIN();
