#include <benchmark/benchmark.h>

#include "wjf/dimension.hpp"
#include "wjf/forms.hpp"
#include "wjf/structure.hpp"

namespace {

void BM_SeriesProduct(benchmark::State& state) {
  const wjf::JacobiSeries f = wjf::phi_0_1(24 * state.range(0) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(f * f);
}
BENCHMARK(BM_SeriesProduct)->Arg(10)->Arg(20);

void BM_ThetaBlock(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(wjf::theta_block(2, 2, 2, 24 * state.range(0) + 1));
}
BENCHMARK(BM_ThetaBlock)->Arg(6)->Arg(10);

void BM_Phi313(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wjf::Phi_0_313(145));
}
BENCHMARK(BM_Phi313);

void BM_WeightTable(benchmark::State& state) {
  for (auto _ : state) {
    const wjf::HilbertNumeratorTable table(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(table.coefficient(0, 0, 0));
  }
}
BENCHMARK(BM_WeightTable)->Arg(6)->Arg(10);

void BM_DimensionCell(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(wjf::verify_dimension(0, {1, 1, 1}, 145));
}
BENCHMARK(BM_DimensionCell);

}  // namespace

BENCHMARK_MAIN();
