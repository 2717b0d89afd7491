// Serial reference vs OpenMP kernels on long sample grids.

#include <benchmark/benchmark.h>

#include "galmag/kernels.hpp"
#include "galmag/oracle.hpp"

namespace {

using galmag::Exec;

const galmag::ClosedFormCurve& helix() {
  static const auto c = galmag::solve_n_magnetic({1.5, 0.3, -0.7}, {0, 1, 1, 0, -1, 0.5});
  return c;
}

std::vector<double> grid_of(benchmark::State& state) {
  return galmag::linspace(0, 100, static_cast<std::size_t>(state.range(0)));
}

template <Exec E>
void BM_SamplePositions(benchmark::State& state) {
  const auto grid = grid_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(galmag::sample_positions(helix(), grid, E));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <Exec E>
void BM_NMagneticResidual(benchmark::State& state) {
  const auto grid = grid_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(galmag::max_n_magnetic_residual(helix(), grid, E));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <Exec E>
void BM_FrameTable(benchmark::State& state) {
  const auto grid = grid_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(galmag::frame_table(helix(), grid, E));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <Exec E>
void BM_MaxDeviation(benchmark::State& state) {
  const auto& c = helix();
  const auto& ic = std::get<galmag::NMagneticIC>(c.initial_data());
  const auto sampled = galmag::integrate(galmag::n_magnetic_system(c.field(), *c.kappa0()),
                                         galmag::initial_state(ic),
                                         {100.0 / static_cast<double>(state.range(0)), 0, 100});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        galmag::max_deviation(c, sampled, galmag::Components::FullState, E));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SamplePositions<Exec::Serial>)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_SamplePositions<Exec::Parallel>)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_NMagneticResidual<Exec::Serial>)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_NMagneticResidual<Exec::Parallel>)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_FrameTable<Exec::Serial>)->Range(1 << 12, 1 << 18);
BENCHMARK(BM_FrameTable<Exec::Parallel>)->Range(1 << 12, 1 << 18);
BENCHMARK(BM_MaxDeviation<Exec::Serial>)->Range(1 << 12, 1 << 18);
BENCHMARK(BM_MaxDeviation<Exec::Parallel>)->Range(1 << 12, 1 << 18);

BENCHMARK_MAIN();
