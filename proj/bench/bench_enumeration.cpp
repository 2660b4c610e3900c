// Serial reference sweeps against the chunked OpenMP kernels.
#include <benchmark/benchmark.h>

#include "sdc/fixtures.hpp"
#include "sdc/kernels.hpp"
#include "sdc/neighborhood.hpp"
#include "sdc/reference.hpp"

namespace {

const sdc::BitMatrix& golay() {
  static const sdc::BitMatrix g = sdc::LinearCode::from_generator(sdc::fixture("G1")).generator();
  return g;
}

const sdc::BitMatrix& random48() {
  static const sdc::BitMatrix g = sdc::random_self_dual(48, 60, 11).generator();
  return g;
}

const sdc::BitMatrix& pick(std::int64_t which) { return which == 0 ? golay() : random48(); }

void BM_NaiveMinWeight(benchmark::State& state) {
  const auto& g = pick(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sdc::reference::naive_min_nonzero_weight(g.rows(), g.ncols()));
}

void BM_GrayMinWeight(benchmark::State& state) {
  const auto& g = pick(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sdc::reference::gray_min_nonzero_weight(g.rows(), g.ncols()));
}

void BM_ParallelMinWeight(benchmark::State& state) {
  const auto& g = pick(state.range(0));
  const sdc::kernels::SweepConfig cfg{static_cast<unsigned>(state.range(1)), std::nullopt};
  for (auto _ : state)
    benchmark::DoNotOptimize(sdc::kernels::min_nonzero_weight(g.rows(), sdc::BitVector(g.ncols()), cfg));
}

void BM_GrayHistogram(benchmark::State& state) {
  const auto& g = pick(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sdc::reference::gray_weight_histogram(g.rows(), g.ncols()));
}

void BM_ParallelHistogram(benchmark::State& state) {
  const auto& g = pick(state.range(0));
  const sdc::kernels::SweepConfig cfg{static_cast<unsigned>(state.range(1)), std::nullopt};
  for (auto _ : state)
    benchmark::DoNotOptimize(sdc::kernels::weight_histogram(g.rows(), sdc::BitVector(g.ncols()), cfg));
}

}  // namespace

// First argument: 0 = Golay (24,12), 1 = random self-dual (48,24).
BENCHMARK(BM_NaiveMinWeight)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GrayMinWeight)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelMinWeight)->ArgsProduct({{0, 1}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GrayHistogram)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelHistogram)->ArgsProduct({{0, 1}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
