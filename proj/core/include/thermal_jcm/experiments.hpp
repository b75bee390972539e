#pragma once

#include <functional>
#include <string>
#include <vector>

#include "thermal_jcm/model.hpp"
#include "thermal_jcm/tfd_expansion.hpp"

// Reproduction harness: inversion traces, revival-period estimates,
// theta sweeps with least-squares fits, correction range tables and
// spectral scans.

namespace tjcm {

struct InversionTrace {
  std::vector<double> t;
  std::vector<double> sigma_z;
  std::vector<CorrectionBreakdown> breakdown;
};

struct PeriodEstimate {
  double theta = 0.0;
  double t_max = 0.0;
  double t_min = 0.0;
  double sigma_at_max = 0.0;
  double sigma_at_min = 0.0;
  double period = 0.0;  // (t_max + t_min) / 2
};

struct FitResult {
  double intercept = 0.0;
  double slope = 0.0;
  double rms_residual = 0.0;
};

struct SweepConfig {
  double theta_lo = 0.0;
  double theta_hi = 0.0;
  int points = 33;
  double window_lo = 0.0;
  double window_hi = 0.0;
  double dt = 0.0;
  int truncation = kDefaultTruncation;
};

struct TableRow {
  std::string label;
  double min = 0.0;
  double max = 0.0;
};

struct SpectralRow {
  double kappa = 0.0;
  int n_ground = -1;  // -1 = bare ground |0,0>
  double gap = 0.0;
};

struct GapDip {
  double kappa = 0.0;
  double gap = 0.0;
};

InversionTrace inversion_trace(const ModelParams& params, const DerivedParams& derived,
                               const ThermalPoint& thermal, const TimeGrid& grid,
                               int truncation = kDefaultTruncation);

// Grid argmax/argmin of sigma_z over [w0, w1] sampled at spacing dt.
// Resolution is quantised at about half a Rabi period; the stairs this
// produces in sweep plots are part of the result, not smoothed away.
PeriodEstimate estimate_period(const ModelParams& params, const DerivedParams& derived,
                               const ThermalPoint& thermal, double window_lo, double window_hi,
                               double dt, int truncation = kDefaultTruncation);

// Same estimator on an arbitrary signal.
PeriodEstimate estimate_period_of(const std::function<double(double)>& signal,
                                  double window_lo, double window_hi, double dt);

// Ordinary least squares of y on x; exact on collinear input.
FitResult fit_line(std::span<const double> x, std::span<const double> y);

// Period estimates over an evenly spaced theta range (endpoints included)
// plus the OLS fit of ln T against theta. Points run in parallel; results
// are gathered in theta order.
std::pair<std::vector<PeriodEstimate>, FitResult> sweep_and_fit(const ModelParams& params,
                                                                const SweepConfig& config);

// The published correction-range tables: six rows (orders 1..3, kinds 1..2)
// of extrema of theta^n/n! P^(n)_{g,kind} on the captioned grid.
// table_id 1: alpha=4, theta=pi/32, t in [0, 20 pi]; table_id 2: alpha=8,
// theta=pi/60, t in [0, 40 pi]. Deterministic bit-for-bit given the grid.
std::vector<TableRow> reproduce_table(int table_id, int truncation = kDefaultTruncation);

// Ground-state index and excitation gap on a kappa grid.
std::vector<SpectralRow> spectral_scan(const ModelParams& params, double kappa_lo,
                                       double kappa_hi, int points, int n_max = 200);

// Local minima of the gap refined by ternary search; degeneracies show up
// as dips many orders below the coarse grid floor.
std::vector<GapDip> refine_gap_dips(const ModelParams& params,
                                    const std::vector<SpectralRow>& coarse, int n_max = 200);

}  // namespace tjcm
