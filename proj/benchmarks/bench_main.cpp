#include <benchmark/benchmark.h>

#include "tgs/analysis.hpp"
#include "tgs/canonical.hpp"
#include "tgs/classify.hpp"
#include "tgs/enumerate.hpp"
#include "tgs/ideals.hpp"
#include "tgs/standard_structures.hpp"

using namespace tgs;

namespace {

void BM_CanonicalForm(benchmark::State& state) {
  const auto pool = enumerate_structures(static_cast<int>(state.range(0)), 1).structures;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(pool[i]));
    i = (i + 1) % pool.size();
  }
}
BENCHMARK(BM_CanonicalForm)->DenseRange(2, 4);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_structures(static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_Enumerate)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  ClassifyOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(4, 1, opts));
}
BENCHMARK(BM_Classify)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Ideals(benchmark::State& state) {
  const auto s = cyclic_product(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(s));
}
BENCHMARK(BM_Ideals)->Arg(6)->Arg(8)->Arg(12);

void BM_Analyze(benchmark::State& state) {
  const auto s = cyclic_product(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(s));
}
BENCHMARK(BM_Analyze)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
