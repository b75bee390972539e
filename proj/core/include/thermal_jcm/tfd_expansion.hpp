#pragma once

#include <array>
#include <span>
#include <utility>

#include "thermal_jcm/model.hpp"

// Low-temperature expansion of the ground-state probability in powers of
// the boson mixing angle theta, through third order. Every correction is
// a fixed linear combination of shifted Poisson series (the Q-series);
// the combination coefficients are integer polynomials in alpha^2 shared
// by both spectral kinds.

namespace tjcm {

inline constexpr int kMaxOrder = 3;

struct QSeriesSpec {
  int kind = 1;  // 1 selects g1, 2 selects g2
  int l = 0;     // integer shift, 0..3 for the third-order theory
  int truncation = kDefaultTruncation;
};

// Per-order pieces of sigma_z_thermal. raw[n][k-1] holds P^(n)_{g,k};
// weighted[n][k-1] holds theta^n/n! * (cos^2 or sin^2 of the fermion
// angle) * P^(n)_{g,k}, i.e. the additive contribution to P_g.
struct CorrectionBreakdown {
  std::array<std::array<double, 2>, kMaxOrder + 1> raw{};
  std::array<std::array<double, 2>, kMaxOrder + 1> weighted{};
  double pg_total = 0.0;
  double sigma_z = 0.0;
};

double q_series(const QSeriesSpec& spec, const ModelParams& params,
                const DerivedParams& derived, double t);

// Coefficient of Q^(l) in the order-n correction, as a polynomial in
// alpha^2 evaluated at the given alpha. Shared by kinds 1 and 2.
double correction_coefficient(int order, int l, double alpha);

// Order-n correction assembled from externally supplied Q values
// q[0..order]. Exposing this keeps the cancellation property testable:
// constant q must annihilate every order >= 1 identically.
double correction_from_q(int order, std::span<const double> q, double alpha);

double correction(int order, int kind, const ModelParams& params, const DerivedParams& derived,
                  double t, int truncation = kDefaultTruncation);

std::pair<double, CorrectionBreakdown> sigma_z_thermal(const ModelParams& params,
                                                       const DerivedParams& derived,
                                                       const ThermalPoint& thermal, double t,
                                                       int truncation = kDefaultTruncation);

// Extrema over the grid of the theta^n/n!-weighted correction (no
// fermion-angle factor; this is the weighting used by the range tables).
std::pair<double, double> correction_range(int order, int kind, const ModelParams& params,
                                           const DerivedParams& derived, double theta,
                                           const TimeGrid& grid,
                                           int truncation = kDefaultTruncation);

// Precomputed Poisson weights and shift tables for repeated evaluation
// over time grids; all methods are const and thread-safe.
class ThermalSeries {
 public:
  ThermalSeries(const ModelParams& params, const DerivedParams& derived,
                int truncation = kDefaultTruncation);

  // Q_k^(l)(t) for l = 0..3.
  std::array<double, kMaxOrder + 1> q1(double t) const;
  std::array<double, kMaxOrder + 1> q2(double t) const;

  CorrectionBreakdown breakdown(const ThermalPoint& thermal, double t) const;
  double sigma_z(const ThermalPoint& thermal, double t) const;

  double alpha() const { return alpha_; }

 private:
  double alpha_;
  double c_;
  double abs_kappa_;
  int truncation_;
  std::vector<double> weights_;                       // Poisson weights
  std::array<std::vector<double>, kMaxOrder + 2> sq_;  // sqrt(n + c + l), l = 0..4
};

// Largest |sigma_z(N=truncation) - sigma_z(N=truncation+50)| over a coarse
// probe grid; used as the truncation convergence certificate.
double truncation_residual(const ModelParams& params, const DerivedParams& derived,
                           const ThermalPoint& thermal, const TimeGrid& grid, int truncation);

}  // namespace tjcm
