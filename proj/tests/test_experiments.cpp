#include <doctest.h>

#include <cmath>
#include <cstring>

#include "thermal_jcm/experiments.hpp"
#include "thermal_jcm/zero_temp.hpp"

using namespace tjcm;

namespace {
const ModelParams kFig{2.0, 4.0, 1.0, 4.0};
}

TEST_CASE("inversion trace on a degenerate grid") {
  const DerivedParams d = derive(kFig);
  const ThermalPoint tp = thermal_point_from_theta(M_PI / 32, kFig);
  const InversionTrace trace = inversion_trace(kFig, d, tp, TimeGrid{0.0, 0.0, 1});
  REQUIRE(trace.t.size() == 1);
  const double c2 = std::cos(tp.fermion_theta) * std::cos(tp.fermion_theta);
  CHECK(trace.sigma_z[0] == doctest::Approx(1.0 - 2.0 * c2).epsilon(1e-8));
}

TEST_CASE("inversion trace shows collapse and revival near 8 pi") {
  const DerivedParams d = derive(kFig);
  const InversionTrace trace =
      inversion_trace(kFig, d, ThermalPoint{}, TimeGrid{0.0, 20.0 * M_PI, 4001});
  double collapse_peak = 0.0;
  double revival_peak = -1.0;
  double revival_argmax = 0.0;
  for (std::size_t i = 0; i < trace.t.size(); ++i) {
    const double t = trace.t[i];
    if (t >= 5.0 && t <= 20.0) collapse_peak = std::max(collapse_peak, std::abs(trace.sigma_z[i]));
    if (t >= 23.0 && t <= 27.5 && trace.sigma_z[i] > revival_peak) {
      revival_peak = trace.sigma_z[i];
      revival_argmax = t;
    }
  }
  CHECK(collapse_peak < 0.25);   // measured 0.162
  CHECK(revival_peak > 0.35);    // measured 0.465
  CHECK(std::abs(revival_argmax - 8.0 * M_PI) < 1.5);
  // each sample's breakdown reconstructs its sigma_z
  for (std::size_t i = 0; i < trace.t.size(); i += 500) {
    CHECK(trace.sigma_z[i] == trace.breakdown[i].sigma_z);
  }
}

TEST_CASE("period estimator on the synthetic envelope signal") {
  // the closed-form collapse/revival envelope is its own oracle: the
  // revival centre sits at 2 pi alpha
  const double alpha = 4.0;
  const auto signal = [&](double t) { return envelope_approx(alpha, 1.0, t); };
  const PeriodEstimate e =
      estimate_period_of(signal, 15.0 * M_PI / 2.0, 10.0 * M_PI, 5.0 * M_PI * 1e-4);
  const double rabi_half = M_PI / (2.0 * alpha);
  CHECK(std::abs(e.period - 2.0 * M_PI * alpha) <= rabi_half + 1e-12);
}

TEST_CASE("period estimator rejects a flat trace") {
  CHECK_THROWS_AS(estimate_period_of([](double) { return 0.25; }, 0.0, 1.0, 0.01),
                  DomainError);
  // alpha = 0 gives sigma_z identically -1
  const ModelParams vac{2.0, 4.0, 1.0, 0.0};
  CHECK_THROWS_AS(
      estimate_period(vac, derive(vac), ThermalPoint{}, 1.0, 2.0, 0.01), DomainError);
}

TEST_CASE("cold period agrees with the revival timescale") {
  const DerivedParams d = derive(kFig);
  const PeriodEstimate e = estimate_period(kFig, d, ThermalPoint{}, 15.0 * M_PI / 2.0,
                                           10.0 * M_PI, 5.0 * M_PI * 1e-4);
  const double revival = timescales(kFig, 0.0).revival;
  // The revival maximum of the full series lags the 2 pi alpha estimate by
  // a bit over half a Rabi oscillation (measured offset 0.657, Rabi period
  // pi/4 = 0.785), so one Rabi period is the honest agreement scale.
  CHECK(std::abs(e.period - revival) <= M_PI / 4.0 + 1e-12);
}

TEST_CASE("line fit recovers collinear data exactly") {
  const std::vector<double> x{0.0, 1.0, 2.0, 3.0, 4.0};
  const std::vector<double> y{1.5, 1.9, 2.3, 2.7, 3.1};
  const FitResult fit = fit_line(x, y);
  CHECK(fit.intercept == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(fit.slope == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(fit.rms_residual < 1e-14);
  CHECK_THROWS_AS(fit_line(std::vector<double>{1.0, 1.0}, std::vector<double>{0.0, 1.0}),
                  DomainError);
  CHECK_THROWS_AS(fit_line(std::vector<double>{1.0}, std::vector<double>{0.0}), DomainError);
}

TEST_CASE("theta sweep produces a positive thermal slope") {
  // coarse, fast variant of the published sweep; the headline effect is
  // the sign and rough size of the slope
  SweepConfig config;
  config.theta_lo = 0.0;
  config.theta_hi = M_PI / 32.0;
  config.points = 5;
  config.window_lo = 15.0 * M_PI / 2.0;
  config.window_hi = 10.0 * M_PI;
  config.dt = M_PI * 1e-2;
  const auto [estimates, fit] = sweep_and_fit(kFig, config);
  REQUIRE(estimates.size() == 5);
  CHECK(estimates.front().theta == 0.0);
  CHECK(estimates.back().theta == doctest::Approx(M_PI / 32.0).epsilon(1e-15));
  CHECK(fit.slope > 0.0);
}

TEST_CASE("range tables are deterministic bit-for-bit") {
  const auto a = reproduce_table(1);
  const auto b = reproduce_table(1);
  REQUIRE(a.size() == 6);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].label == b[i].label);
    CHECK(std::memcmp(&a[i].min, &b[i].min, sizeof(double)) == 0);
    CHECK(std::memcmp(&a[i].max, &b[i].max, sizeof(double)) == 0);
  }
  CHECK_THROWS_AS(reproduce_table(3), DomainError);
}

TEST_CASE("spectral scan endpoints") {
  const ModelParams res{1.0, 1.0, 1.0, 0.0};
  const auto rows = spectral_scan(res, 0.0, 10.0, 101);
  REQUIRE(rows.size() == 101);
  CHECK(rows.front().kappa == 0.0);
  CHECK(rows.front().n_ground == -1);  // bare ground
  CHECK(rows.front().gap == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(rows.back().n_ground == 24);
}

TEST_CASE("gap dips refine far below the coarse grid floor") {
  const ModelParams res{1.0, 1.0, 1.0, 0.0};
  const auto coarse = spectral_scan(res, 0.0, 10.0, 2001);
  const auto dips = refine_gap_dips(res, coarse);
  int deep = 0;
  for (const auto& dip : dips) {
    if (dip.gap < 1e-6) ++deep;
  }
  CHECK(deep >= 3);
}

TEST_CASE("gap oscillates in kappa and its amplitude decays") {
  const ModelParams res{1.0, 1.0, 1.0, 0.0};
  const auto rows = spectral_scan(res, 0.0, 10.0, 2001);
  // local maxima of the gap trace
  std::vector<double> peak_kappa;
  std::vector<double> peak_gap;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    if (rows[i].gap > rows[i - 1].gap && rows[i].gap > rows[i + 1].gap) {
      peak_kappa.push_back(rows[i].kappa);
      peak_gap.push_back(std::log(rows[i].gap));
    }
  }
  CHECK(peak_kappa.size() >= 5);
  CHECK(std::exp(peak_gap.back()) < 0.1 * std::exp(peak_gap.front()));
  // roughly exponential decay: negative slope of ln(peak) vs kappa
  const FitResult fit = fit_line(peak_kappa, peak_gap);
  CHECK(fit.slope < -0.2);
}
