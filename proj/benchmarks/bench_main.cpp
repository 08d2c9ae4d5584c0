#include <benchmark/benchmark.h>

#include "gpfree/euler.hpp"
#include "gpfree/greedy_density.hpp"
#include "gpfree/lattice.hpp"
#include "gpfree/lower_bounds.hpp"
#include "gpfree/upper_bounds.hpp"

using namespace gpfree;

static void BM_SplittingProduct(benchmark::State& state) {
  const FieldSpec f = make_field(-1);
  const auto P = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(euler_product_by_splitting(f, P));
}
BENCHMARK(BM_SplittingProduct)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_SurveyChunk(benchmark::State& state) {
  SurveyOptions o;
  o.abs_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(survey(o));
}
BENCHMARK(BM_SurveyChunk)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_MinExclusions(benchmark::State& state) {
  const FieldSpec f = make_field(-1);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_exclusions(f, n));
}
BENCHMARK(BM_MinExclusions)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_ExclusionProfile(benchmark::State& state) {
  const FieldSpec f = make_field(-2);
  for (auto _ : state) benchmark::DoNotOptimize(exclusion_profile(f, 500));
}
BENCHMARK(BM_ExclusionProfile)->Unit(benchmark::kMillisecond);

static void BM_Certify(benchmark::State& state) {
  const IntervalSystem s = preset(-1);
  for (auto _ : state) benchmark::DoNotOptimize(certify_gp_free(s));
}
BENCHMARK(BM_Certify)->Unit(benchmark::kMillisecond);

static void BM_GreedyElements(benchmark::State& state) {
  const FieldSpec f = make_field(-1);
  const auto B = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_set(f, B, GreedyMode::kFieldRatio));
}
BENCHMARK(BM_GreedyElements)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
