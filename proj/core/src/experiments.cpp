#include "thermal_jcm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "thermal_jcm/parallel.hpp"
#include "thermal_jcm/zero_temp.hpp"

namespace tjcm {

InversionTrace inversion_trace(const ModelParams& params, const DerivedParams& derived,
                               const ThermalPoint& thermal, const TimeGrid& grid,
                               int truncation) {
  if (grid.samples < 1) throw DomainError("inversion_trace: grid needs at least one sample");
  const ThermalSeries series(params, derived, truncation);
  InversionTrace trace;
  trace.t.resize(grid.samples);
  trace.sigma_z.resize(grid.samples);
  trace.breakdown.resize(grid.samples);
  parallel_for(grid.samples, [&](std::size_t i) {
    const double t = grid.at(static_cast<int>(i));
    trace.t[i] = t;
    trace.breakdown[i] = series.breakdown(thermal, t);
    trace.sigma_z[i] = trace.breakdown[i].sigma_z;
  });
  return trace;
}

namespace {

PeriodEstimate period_from_samples(const std::vector<double>& sz, double window_lo, double dt) {
  int imax = 0;
  int imin = 0;
  for (int i = 1; i < static_cast<int>(sz.size()); ++i) {
    if (sz[i] > sz[imax]) imax = i;
    if (sz[i] < sz[imin]) imin = i;
  }
  if (!(sz[imax] > sz[imin])) {
    throw DomainError("estimate_period: no revival detected (flat trace in window)");
  }
  PeriodEstimate out;
  out.t_max = window_lo + dt * imax;
  out.t_min = window_lo + dt * imin;
  out.sigma_at_max = sz[imax];
  out.sigma_at_min = sz[imin];
  out.period = (out.t_max + out.t_min) / 2.0;
  return out;
}

}  // namespace

PeriodEstimate estimate_period(const ModelParams& params, const DerivedParams& derived,
                               const ThermalPoint& thermal, double window_lo, double window_hi,
                               double dt, int truncation) {
  if (!(dt > 0.0) || !(window_hi > window_lo)) {
    throw DomainError("estimate_period: invalid window or step");
  }
  const int samples = static_cast<int>(std::lround((window_hi - window_lo) / dt)) + 1;
  const ThermalSeries series(params, derived, truncation);

  std::vector<double> sz(samples);
  parallel_for(samples, [&](std::size_t i) {
    sz[i] = series.sigma_z(thermal, window_lo + dt * static_cast<double>(i));
  });
  PeriodEstimate out = period_from_samples(sz, window_lo, dt);
  out.theta = thermal.boson_theta;
  return out;
}

PeriodEstimate estimate_period_of(const std::function<double(double)>& signal,
                                  double window_lo, double window_hi, double dt) {
  if (!(dt > 0.0) || !(window_hi > window_lo)) {
    throw DomainError("estimate_period: invalid window or step");
  }
  const int samples = static_cast<int>(std::lround((window_hi - window_lo) / dt)) + 1;
  std::vector<double> sz(samples);
  for (int i = 0; i < samples; ++i) sz[i] = signal(window_lo + dt * i);
  return period_from_samples(sz, window_lo, dt);
}

FitResult fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("fit_line: need at least two matching samples");
  }
  const double n = static_cast<double>(x.size());
  double xm = 0.0;
  double ym = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xm += x[i];
    ym += y[i];
  }
  xm /= n;
  ym /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - xm) * (x[i] - xm);
    sxy += (x[i] - xm) * (y[i] - ym);
  }
  if (sxx == 0.0) throw DomainError("fit_line: degenerate abscissae");
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = ym - fit.slope * xm;
  double rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    rss += r * r;
  }
  fit.rms_residual = std::sqrt(rss / n);
  return fit;
}

std::pair<std::vector<PeriodEstimate>, FitResult> sweep_and_fit(const ModelParams& params,
                                                                const SweepConfig& config) {
  if (config.points < 2) throw DomainError("sweep_and_fit: need at least two theta points");
  if (config.theta_hi < config.theta_lo) throw DomainError("sweep_and_fit: bad theta range");
  const DerivedParams derived = derive(params);

  std::vector<PeriodEstimate> estimates(config.points);
  const double step = (config.theta_hi - config.theta_lo) / (config.points - 1);
  // Inner grids already parallelise; points run sequentially and land in
  // theta order regardless.
  for (int i = 0; i < config.points; ++i) {
    const double theta = config.theta_lo + step * i;
    const ThermalPoint thermal = thermal_point_from_theta(theta, params);
    estimates[i] = estimate_period(params, derived, thermal, config.window_lo,
                                   config.window_hi, config.dt, config.truncation);
    estimates[i].theta = theta;
  }

  std::vector<double> xs(config.points);
  std::vector<double> ys(config.points);
  for (int i = 0; i < config.points; ++i) {
    xs[i] = estimates[i].theta;
    ys[i] = std::log(estimates[i].period);
  }
  return {std::move(estimates), fit_line(xs, ys)};
}

std::vector<TableRow> reproduce_table(int table_id, int truncation) {
  ModelParams params;
  params.omega0 = 2.0;
  params.omega = 4.0;
  params.kappa = 1.0;
  double theta = 0.0;
  TimeGrid grid;
  grid.samples = 10001;
  if (table_id == 1) {
    params.alpha = 4.0;
    theta = M_PI / 32.0;
    grid.t1 = 20.0 * M_PI;
  } else if (table_id == 2) {
    params.alpha = 8.0;
    theta = M_PI / 60.0;
    grid.t1 = 40.0 * M_PI;
  } else {
    throw DomainError("reproduce_table: table_id must be 1 or 2");
  }
  const DerivedParams derived = derive(params);

  static const char* kLabels[3][2] = {
      {"theta*P1_g1", "theta*P1_g2"},
      {"theta^2/2*P2_g1", "theta^2/2*P2_g2"},
      {"theta^3/6*P3_g1", "theta^3/6*P3_g2"},
  };
  std::vector<TableRow> rows(6);
  parallel_for(6, [&](std::size_t i) {
    const int order = static_cast<int>(i) / 2 + 1;
    const int kind = static_cast<int>(i) % 2 + 1;
    const auto [lo, hi] = correction_range(order, kind, params, derived, theta, grid, truncation);
    rows[i] = TableRow{kLabels[order - 1][kind - 1], lo, hi};
  });
  return rows;
}

std::vector<SpectralRow> spectral_scan(const ModelParams& params, double kappa_lo,
                                       double kappa_hi, int points, int n_max) {
  if (points < 1) throw DomainError("spectral_scan: need at least one point");
  if (kappa_hi < kappa_lo) throw DomainError("spectral_scan: bad kappa range");
  std::vector<SpectralRow> rows(points);
  const double step = points > 1 ? (kappa_hi - kappa_lo) / (points - 1) : 0.0;
  parallel_for(points, [&](std::size_t i) {
    const double kappa = kappa_lo + step * static_cast<double>(i);
    const GroundState gs = ground_state_index(params, kappa, n_max);
    rows[i] = SpectralRow{kappa, gs.n, excitation_gap(params, kappa, n_max)};
  });
  return rows;
}

std::vector<GapDip> refine_gap_dips(const ModelParams& params,
                                    const std::vector<SpectralRow>& coarse, int n_max) {
  std::vector<GapDip> dips;
  for (std::size_t i = 1; i + 1 < coarse.size(); ++i) {
    if (!(coarse[i].gap < coarse[i - 1].gap && coarse[i].gap < coarse[i + 1].gap)) continue;
    // ternary search on the V-shaped dip
    double lo = coarse[i - 1].kappa;
    double hi = coarse[i + 1].kappa;
    for (int iter = 0; iter < 120 && hi - lo > 1e-14; ++iter) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      if (excitation_gap(params, m1, n_max) < excitation_gap(params, m2, n_max)) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    const double kappa = (lo + hi) / 2.0;
    dips.push_back(GapDip{kappa, excitation_gap(params, kappa, n_max)});
  }
  return dips;
}

}  // namespace tjcm
