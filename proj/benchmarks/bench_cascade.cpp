#include <benchmark/benchmark.h>

#include <upsub/runner.hpp>

using namespace upsub;

static void BM_UnivariateCascade(benchmark::State& state) {
  const auto seq = MaskSequence::univariate_up(1);
  const int levels = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(cascade(seq, levels));
}
BENCHMARK(BM_UnivariateCascade)->Arg(8)->Arg(12);

static void BM_BivariateCascade(benchmark::State& state) {
  const auto seq = MaskSequence::bivariate_up(1);
  const int levels = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(cascade(seq, levels));
}
BENCHMARK(BM_BivariateCascade)->Arg(4)->Arg(6);

static void BM_SubdivisionStep(benchmark::State& state) {
  const Mask a = box3_mask(2);
  LatticeData f(0, Box{{0, 0}, {255, 255}});
  for (auto& v : f.values())
    v = 1.0;
  SubdivisionOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(apply_subdivision(a, f, opts));
}
BENCHMARK(BM_SubdivisionStep)->Arg(1)->Arg(2)->Arg(4);
