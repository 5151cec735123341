#include <benchmark/benchmark.h>

#include <upsub/polytope.hpp>
#include <upsub/support.hpp>

using namespace upsub;

static void BM_MinkowskiSum(benchmark::State& state) {
  const auto hex = extended_support(box3_mask(0));
  const auto big = scale(hex, Rational(7, 3));
  for (auto _ : state)
    benchmark::DoNotOptimize(minkowski_sum(hex, big));
}
BENCHMARK(BM_MinkowskiSum);

static void BM_PredictedSupport(benchmark::State& state) {
  const auto seq = MaskSequence::bivariate_up(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(predicted_support(seq));
}
BENCHMARK(BM_PredictedSupport)->Arg(1)->Arg(4);

static void BM_Hausdorff(benchmark::State& state) {
  const auto hex = extended_support(box3_mask(0));
  const auto big = scale(hex, Rational(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(hausdorff_sq(hex, big));
}
BENCHMARK(BM_Hausdorff);
