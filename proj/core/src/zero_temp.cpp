#include "thermal_jcm/zero_temp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tjcm {

double pg_zero(const ModelParams& params, const DerivedParams& derived, double t,
               int truncation) {
  if (truncation < 1) throw DomainError("pg_zero: truncation must be >= 1");
  if (t < 0.0) throw DomainError("pg_zero: t must be >= 0");
  const auto w = poisson_weights(params.alpha, truncation);
  double sum = 0.0;
  for (int n = 0; n <= truncation; ++n) {
    sum += w[n] * g1(n + derived.c, derived.c, params.kappa, t);
  }
  return sum;
}

double sigma_z_zero(const ModelParams& params, const DerivedParams& derived, double t,
                    int truncation) {
  return 1.0 - 2.0 * pg_zero(params, derived, t, truncation);
}

double envelope_approx(double alpha, double kappa, double t) {
  const double a = std::abs(alpha);
  const double k = std::abs(kappa);
  const double a2 = alpha * alpha;
  return -std::exp(a2 * (std::cos(k * t / a) - 1.0)) *
         std::cos(a * k * t + a2 * std::sin(k * t / a));
}

TimescaleEstimate timescales(const ModelParams& params, double theta) {
  if (params.alpha == 0.0 || params.kappa == 0.0) {
    throw DomainError("timescales: alpha and kappa must be nonzero");
  }
  const double a = std::abs(params.alpha);
  const double k = std::abs(params.kappa);
  TimescaleEstimate out;
  out.collapse = 1.0 / k;
  out.revival = 2.0 * M_PI * a / k;
  out.rabi = M_PI / (a * k);
  out.revival_thermal = out.revival * std::exp(theta);
  return out;
}

Spectrum spectrum(const ModelParams& params, const DerivedParams& derived, int n_max) {
  if (n_max < 0) throw DomainError("spectrum: n_max must be >= 0");
  Spectrum out;
  out.E00 = -params.omega0 / 2.0;
  out.rows.reserve(static_cast<std::size_t>(n_max) + 1);
  const double half_dw = derived.delta_omega / 2.0;
  for (int n = 0; n <= n_max; ++n) {
    SpectrumRow row;
    row.n = n;
    row.lambda_n = std::sqrt(half_dw * half_dw + params.kappa * params.kappa * (n + 1));
    row.E_n1 = params.omega * (n + 0.5) + row.lambda_n;
    row.E_n2 = params.omega * (n + 0.5) - row.lambda_n;
    row.theta_n = std::atan2(params.kappa * std::sqrt(n + 1.0), half_dw + row.lambda_n);
    out.rows.push_back(row);
  }
  return out;
}

GroundState ground_state_index(const ModelParams& params, double kappa_value, int n_max) {
  ModelParams p = params;
  p.kappa = kappa_value;
  // kappa = 0 leaves the dressed doublets unsplit by the coupling but the
  // level formulas still apply; derive() is bypassed because c is not needed.
  DerivedParams d;
  d.delta_omega = p.omega - p.omega0;
  d.c = 0.0;
  const Spectrum sp = spectrum(p, d, n_max);
  GroundState best;
  best.n = -1;
  best.energy = sp.E00;
  for (const auto& row : sp.rows) {
    if (row.E_n2 < best.energy) {
      best.energy = row.E_n2;
      best.n = row.n;
    }
  }
  if (best.n == n_max) {
    throw GuardError("ground_state_index: minimiser at truncation boundary; increase n_max");
  }
  return best;
}

double excitation_gap(const ModelParams& params, double kappa_value, int n_max) {
  ModelParams p = params;
  p.kappa = kappa_value;
  DerivedParams d;
  d.delta_omega = p.omega - p.omega0;
  d.c = 0.0;
  const Spectrum sp = spectrum(p, d, n_max);

  double smallest = sp.E00;
  double second = std::numeric_limits<double>::infinity();
  int smallest_n = -1;
  int second_n = -1;
  auto offer = [&](double e, int n) {
    if (e < smallest) {
      second = smallest;
      second_n = smallest_n;
      smallest = e;
      smallest_n = n;
    } else if (e < second) {
      second = e;
      second_n = n;
    }
  };
  for (const auto& row : sp.rows) {
    offer(row.E_n2, row.n);
    offer(row.E_n1, row.n);
  }
  if (smallest_n == n_max || second_n == n_max) {
    throw GuardError("excitation_gap: extremal level at truncation boundary; increase n_max");
  }
  return second - smallest;
}

double short_time_inversion(double nbar, double phi, double kappa, double t, double theta) {
  const double kt = kappa * t;
  const double cp = std::cos(phi);
  return 1.0 - 2.0 * kt * kt * (4.0 * nbar * std::exp(2.0 * theta) * cp * cp + 1.0);
}

}  // namespace tjcm
