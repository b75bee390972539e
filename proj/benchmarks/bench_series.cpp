#include <benchmark/benchmark.h>

#include <cmath>

#include "thermal_jcm/experiments.hpp"
#include "thermal_jcm/oracle.hpp"
#include "thermal_jcm/tfd_expansion.hpp"

using namespace tjcm;

namespace {

const ModelParams kFig{2.0, 4.0, 1.0, 4.0};

void BM_SigmaZThermal(benchmark::State& state) {
  const DerivedParams d = derive(kFig);
  const ThermalSeries series(kFig, d, static_cast<int>(state.range(0)));
  const ThermalPoint tp = thermal_point_from_theta(M_PI / 32, kFig);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(series.sigma_z(tp, t));
    t += 0.01;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SigmaZThermal)->Arg(100)->Arg(150);

void BM_RangeTableRow(benchmark::State& state) {
  const DerivedParams d = derive(kFig);
  const TimeGrid grid{0.0, 20.0 * M_PI, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(correction_range(3, 1, kFig, d, M_PI / 32, grid));
  }
}
BENCHMARK(BM_RangeTableRow)->Arg(1001)->Arg(10001)->Unit(benchmark::kMillisecond);

void BM_ExactPg(benchmark::State& state) {
  const ModelParams params{2.0, 4.0, 1.0, 2.0};
  const DerivedParams d = derive(params);
  const ThermalPoint tp = thermal_point_from_theta(M_PI / 64, params);
  OracleConfig config;
  config.dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_pg(params, d, tp, 5.0, config));
  }
}
BENCHMARK(BM_ExactPg)->Arg(48)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_IdentityPowerCommutator(benchmark::State& state) {
  OracleConfig config;
  config.dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_identity("comm_A_Bn", 4, config));
  }
}
BENCHMARK(BM_IdentityPowerCommutator)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_PeriodEstimate(benchmark::State& state) {
  const DerivedParams d = derive(kFig);
  const ThermalPoint tp = thermal_point_from_theta(M_PI / 32, kFig);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        estimate_period(kFig, d, tp, 15.0 * M_PI / 2.0, 10.0 * M_PI, 5.0 * M_PI * 1e-4));
  }
}
BENCHMARK(BM_PeriodEstimate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
