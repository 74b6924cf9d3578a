#include <benchmark/benchmark.h>

#include "twodir/cascade.hpp"
#include "twodir/derivs.hpp"
#include "twodir/fixtures.hpp"
#include "twodir/moments.hpp"
#include "twodir/pointvals.hpp"

namespace {

const twodir::TwoDirectionSystem& fixture(int which) {
  static const auto a = twodir::load_fixture("5.1");
  static const auto b = twodir::load_fixture("5.2");
  return which == 0 ? a : b;
}

void BM_IntegerValues(benchmark::State& state) {
  const auto& sys = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(twodir::integer_values(sys));
}
BENCHMARK(BM_IntegerValues)->Arg(0)->Arg(1);

void BM_RefineTo(benchmark::State& state) {
  const auto& sys = fixture(0);
  const auto base = twodir::integer_values(sys).table;
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(twodir::refine_to(sys, base, level));
  state.SetItemsProcessed(state.iterations() * (4 << level));
}
BENCHMARK(BM_RefineTo)->Arg(6)->Arg(10)->Arg(14);

void BM_DerivativeValues(benchmark::State& state) {
  const auto& sys = fixture(0);
  const auto moments = twodir::continuous_moments(sys, 1);
  for (auto _ : state) benchmark::DoNotOptimize(twodir::derivative_integer_values(sys, 1, moments));
}
BENCHMARK(BM_DerivativeValues);

void BM_CascadeRun(benchmark::State& state) {
  const auto& sys = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(twodir::cascade_run(sys, 5, 60, 1e-10));
}
BENCHMARK(BM_CascadeRun)->Arg(0)->Arg(1);

void BM_Moments(benchmark::State& state) {
  const auto& sys = fixture(1);
  for (auto _ : state) benchmark::DoNotOptimize(twodir::continuous_moments(sys, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Moments)->Arg(4)->Arg(20);

}  // namespace
BENCHMARK_MAIN();
