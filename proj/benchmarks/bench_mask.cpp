#include <benchmark/benchmark.h>

#include <upsub/mask.hpp>

using namespace upsub;

static void BM_Box3Mask(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(box3_mask(m));
}
BENCHMARK(BM_Box3Mask)->Arg(1)->Arg(4)->Arg(8);

static void BM_MaskProduct(benchmark::State& state) {
  const Mask a = box3_mask(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(product(a, a));
}
BENCHMARK(BM_MaskProduct)->Arg(1)->Arg(3)->Arg(6);

static void BM_DivideExact(benchmark::State& state) {
  const Mask a = box3_mask(static_cast<int>(state.range(0)));
  const Mask f = full_smoothing_factor(Basis::canonical(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(divide_exact(a, f));
}
BENCHMARK(BM_DivideExact)->Arg(2)->Arg(5);

BENCHMARK_MAIN();
