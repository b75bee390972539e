#pragma once

#include <vector>

#include "thermal_jcm/model.hpp"

// Exact zero-temperature dynamics of the Jaynes-Cummings model: ground
// state probability, population inversion, the collapse/revival envelope
// approximation, the exact dressed-state spectrum with ground-state and
// excitation-gap scans, and the short-time law with counter-rotating terms.

namespace tjcm {

struct SpectrumRow {
  int n = 0;
  double lambda_n = 0.0;  // Rabi splitting sqrt((dw/2)^2 + kappa^2 (n+1))
  double E_n1 = 0.0;      // omega (n + 1/2) + lambda_n
  double E_n2 = 0.0;      // omega (n + 1/2) - lambda_n
  double theta_n = 0.0;   // mixing angle, tan = kappa sqrt(n+1) / (dw/2 + lambda_n)
};

struct Spectrum {
  std::vector<SpectrumRow> rows;
  double E00 = 0.0;  // uncoupled ground level -omega0/2
};

struct TimescaleEstimate {
  double collapse = 0.0;         // ~ 1/|kappa|
  double revival = 0.0;          // 2 pi |alpha| / |kappa|
  double rabi = 0.0;             // pi / (|alpha| |kappa|)
  double revival_thermal = 0.0;  // 2 pi |alpha| e^theta / |kappa|
};

// Result of the spectral ground-state search; n = -1 denotes the bare
// ground level |0,0> with energy -omega0/2.
struct GroundState {
  int n = -1;
  double energy = 0.0;

  bool bare() const { return n < 0; }
};

double pg_zero(const ModelParams& params, const DerivedParams& derived, double t,
               int truncation = kDefaultTruncation);

double sigma_z_zero(const ModelParams& params, const DerivedParams& derived, double t,
                    int truncation = kDefaultTruncation);

// Collapse/revival envelope valid for alpha^2 >> 1:
//   -exp[alpha^2 (cos(|k|t/|a|) - 1)] cos(|a||k|t + alpha^2 sin(|k|t/|a|)).
double envelope_approx(double alpha, double kappa, double t);

TimescaleEstimate timescales(const ModelParams& params, double theta);

Spectrum spectrum(const ModelParams& params, const DerivedParams& derived, int n_max);

// argmin over {E00} and {E_{n,2}}; errors if the minimiser sits on the
// n_max boundary (truncation would then be suspect).
GroundState ground_state_index(const ModelParams& params, double kappa_value, int n_max = 200);

// Second-smallest minus smallest level over {E00, E_{n,1}, E_{n,2}}.
double excitation_gap(const ModelParams& params, double kappa_value, int n_max = 200);

// Quadratic short-time law for the inversion under the full dipole
// Hamiltonian (counter-rotating terms kept), initial state |alpha e^{i phi}>|e>:
//   1 - 2 (kappa t)^2 (4 nbar e^{2 theta} cos^2 phi + 1).
// theta > 0 applies the heuristic thermal amplitude rescaling; only the
// theta = 0 branch is checked against exact evolution.
double short_time_inversion(double nbar, double phi, double kappa, double t, double theta = 0.0);

}  // namespace tjcm
