#pragma once

#include <vector>

#include "thermal_jcm/errors.hpp"

// Physical parameters of the Jaynes-Cummings model and the spectral
// functions shared by the zero-temperature dynamics, the low-temperature
// series and the brute-force oracle. Units: hbar = k_B = 1 throughout,
// so frequencies carry energy units and beta carries inverse frequency.

namespace tjcm {

struct ModelParams {
  double omega0 = 1.0;  // atom transition frequency
  double omega = 1.0;   // cavity mode frequency
  double kappa = 1.0;   // coupling constant, real
  double alpha = 0.0;   // coherent-state amplitude, real
};

struct DerivedParams {
  double delta_omega = 0.0;  // omega - omega0
  double c = 0.0;            // (delta_omega / 2 kappa)^2, dimensionless detuning
};

// Inverse temperature together with the bosonic and fermionic
// quasi-particle mixing angles it induces.
struct ThermalPoint {
  double beta = 0.0;
  double boson_theta = 0.0;    // arctanh(exp(-beta*omega/2)), >= 0
  double fermion_theta = 0.0;  // arctan(exp(-beta*omega0/2)), in [0, pi/4)
};

inline constexpr int kDefaultTruncation = 100;  // Poisson-sum cutoff N

DerivedParams derive(const ModelParams& params);

// Spectral weight functions of the dressed Rabi frequencies. Both are
// entire in x; the removable singularity of sin^2(sqrt(x) kt)/x at x = 0
// is evaluated by a short Taylor branch below x = 1e-8.
//   g1(x) = cos^2(sqrt(x)|k|t) + c sin^2(sqrt(x)|k|t)/x
//   g2(x) = sin^2(sqrt(x)|k|t)/x * (x - c)
double g1(double x, double c, double kappa, double t);
double g2(double x, double c, double kappa, double t);

// sin^2(sqrt(x)*kt)/x with the series branch; kt is a product |kappa|*t.
double sin_sq_over_x(double x, double kt);

ThermalPoint thermal_point(double beta, const ModelParams& params);
double theta_to_beta(double theta, double omega);

// Thermal point reached from a boson mixing angle; theta = 0 maps to
// beta = +infinity (both angles vanish).
ThermalPoint thermal_point_from_theta(double theta, const ModelParams& params);

// e^{-alpha^2} alpha^{2n} / n! for n = 0..n_max.
std::vector<double> poisson_weights(double alpha, int n_max);

// Uniform time grid with inclusive endpoints; samples == 1 degenerates
// to the single point t0.
struct TimeGrid {
  double t0 = 0.0;
  double t1 = 0.0;
  int samples = 1;

  double dt() const { return samples > 1 ? (t1 - t0) / (samples - 1) : 0.0; }
  double at(int i) const { return t0 + dt() * i; }
};

}  // namespace tjcm
