#include "thermal_jcm/model.hpp"

#include <cmath>
#include <limits>

namespace tjcm {

namespace {
// Below this the removable singularity of sin^2(sqrt(x) kt)/x is handled
// by a three-term Taylor branch.
constexpr double kSeriesBranch = 1e-8;
}  // namespace

DerivedParams derive(const ModelParams& params) {
  if (params.omega0 <= 0.0 || params.omega <= 0.0) {
    throw DomainError("derive: omega0 and omega must be positive");
  }
  if (params.kappa == 0.0) {
    throw DomainError("derive: degenerate coupling (kappa = 0), c undefined");
  }
  DerivedParams out;
  out.delta_omega = params.omega - params.omega0;
  const double r = out.delta_omega / (2.0 * params.kappa);
  out.c = r * r;
  return out;
}

double sin_sq_over_x(double x, double kt) {
  if (x < 0.0) throw DomainError("sin_sq_over_x: negative argument");
  if (x < kSeriesBranch) {
    const double u = kt * kt;
    const double xu = x * u;
    return u * (1.0 - xu / 3.0 + 2.0 * xu * xu / 45.0);
  }
  const double s = std::sin(std::sqrt(x) * kt);
  return s * s / x;
}

double g1(double x, double c, double kappa, double t) {
  if (x < 0.0) throw DomainError("g1: argument x must be >= 0");
  const double kt = std::abs(kappa) * t;
  const double co = std::cos(std::sqrt(x) * kt);
  return co * co + c * sin_sq_over_x(x, kt);
}

double g2(double x, double c, double kappa, double t) {
  if (x < 0.0) throw DomainError("g2: argument x must be >= 0");
  const double kt = std::abs(kappa) * t;
  return sin_sq_over_x(x, kt) * (x - c);
}

ThermalPoint thermal_point(double beta, const ModelParams& params) {
  if (!(beta > 0.0)) throw DomainError("thermal_point: beta must be positive");
  ThermalPoint out;
  out.beta = beta;
  out.boson_theta = std::atanh(std::exp(-beta * params.omega / 2.0));
  out.fermion_theta = std::atan(std::exp(-beta * params.omega0 / 2.0));
  return out;
}

double theta_to_beta(double theta, double omega) {
  if (!(theta > 0.0)) throw DomainError("theta_to_beta: theta must be positive");
  return -2.0 * std::log(std::tanh(theta)) / omega;
}

ThermalPoint thermal_point_from_theta(double theta, const ModelParams& params) {
  if (theta < 0.0) throw DomainError("thermal_point_from_theta: theta must be >= 0");
  if (theta == 0.0) {
    ThermalPoint out;
    out.beta = std::numeric_limits<double>::infinity();
    return out;
  }
  return thermal_point(theta_to_beta(theta, params.omega), params);
}

std::vector<double> poisson_weights(double alpha, int n_max) {
  std::vector<double> w(static_cast<std::size_t>(n_max) + 1);
  const double a2 = alpha * alpha;
  w[0] = std::exp(-a2);
  for (int n = 1; n <= n_max; ++n) {
    w[n] = w[n - 1] * a2 / n;
  }
  return w;
}

}  // namespace tjcm
