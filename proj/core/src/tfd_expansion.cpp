#include "thermal_jcm/tfd_expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tjcm {

namespace {

// Coefficient of Q^(l) in the order-n correction as integer-coefficient
// polynomials in u = alpha^2: the factored forms
//   n=1: -2u [Q0 - Q1]
//   n=2: 2(2u+1)(u-1) Q0 - 2(2u+1)(2u-1) Q1 + 2u(2u+1) Q2
//   n=3: -4u(2u^2-3u-4) Q0 + 4u(6u^2-3u-10) Q1 - 12u(2u^2+u-2) Q2
//        + 4u^2(2u+3) Q3
// expanded once. Each row over l sums to zero, which forces the constant-Q
// cancellation of every order >= 1.
constexpr int kPolyCoeffs[kMaxOrder + 1][kMaxOrder + 1][kMaxOrder + 1] = {
    // order 0
    {{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
    // order 1: -2u, 2u
    {{0, -2, 0, 0}, {0, 2, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
    // order 2: 4u^2-2u-2, -8u^2+2, 4u^2+2u
    {{-2, -2, 4, 0}, {2, 0, -8, 0}, {0, 2, 4, 0}, {0, 0, 0, 0}},
    // order 3: -8u^3+12u^2+16u, 24u^3-12u^2-40u, -24u^3-12u^2+24u, 8u^3+12u^2
    {{0, 16, 12, -8}, {0, -40, -12, 24}, {0, 24, -12, -24}, {0, 0, 12, 8}},
};

void check_order(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw DomainError("correction: only orders 0..3 are implemented");
  }
}

void check_kind(int kind) {
  if (kind != 1 && kind != 2) throw DomainError("q_series: kind must be 1 or 2");
}

}  // namespace

double correction_coefficient(int order, int l, double alpha) {
  check_order(order);
  if (l < 0 || l > kMaxOrder) throw DomainError("correction_coefficient: l out of range");
  const double u = alpha * alpha;
  double value = 0.0;
  double upow = 1.0;
  for (int p = 0; p <= kMaxOrder; ++p) {
    value += kPolyCoeffs[order][l][p] * upow;
    upow *= u;
  }
  return value;
}

double correction_from_q(int order, std::span<const double> q, double alpha) {
  check_order(order);
  if (static_cast<int>(q.size()) < order + 1) {
    throw DomainError("correction_from_q: need q values for l = 0..order");
  }
  double sum = 0.0;
  for (int l = 0; l <= order; ++l) {
    sum += correction_coefficient(order, l, alpha) * q[l];
  }
  return sum;
}

double q_series(const QSeriesSpec& spec, const ModelParams& params,
                const DerivedParams& derived, double t) {
  check_kind(spec.kind);
  if (spec.l < 0) throw DomainError("q_series: shift l must be >= 0");
  if (spec.truncation < 1) throw DomainError("q_series: truncation must be >= 1");
  const auto w = poisson_weights(params.alpha, spec.truncation);
  double sum = 0.0;
  for (int n = 0; n <= spec.truncation; ++n) {
    if (spec.kind == 1) {
      sum += w[n] * g1(n + derived.c + spec.l, derived.c, params.kappa, t);
    } else {
      sum += w[n] * g2(n + derived.c + 1 + spec.l, derived.c, params.kappa, t);
    }
  }
  return sum;
}

double correction(int order, int kind, const ModelParams& params, const DerivedParams& derived,
                  double t, int truncation) {
  check_order(order);
  check_kind(kind);
  std::array<double, kMaxOrder + 1> q{};
  for (int l = 0; l <= order; ++l) {
    q[l] = q_series({kind, l, truncation}, params, derived, t);
  }
  return correction_from_q(order, std::span<const double>(q.data(), order + 1), params.alpha);
}

ThermalSeries::ThermalSeries(const ModelParams& params, const DerivedParams& derived,
                             int truncation)
    : alpha_(params.alpha),
      c_(derived.c),
      abs_kappa_(std::abs(params.kappa)),
      truncation_(truncation),
      weights_(poisson_weights(params.alpha, truncation)) {
  if (truncation < 1) throw DomainError("ThermalSeries: truncation must be >= 1");
  for (int l = 0; l <= kMaxOrder + 1; ++l) {
    sq_[l].resize(static_cast<std::size_t>(truncation_) + 1);
    for (int n = 0; n <= truncation_; ++n) {
      sq_[l][n] = std::sqrt(n + c_ + l);
    }
  }
}

// Q1^(l) uses g1(x) = 1 - sin^2(sqrt(x) kt) (x - c)/x at x = n + c + l, so
// the n = l = 0 term is exactly 1 for every c; Q2^(l) uses
// g2(x) = sin^2(sqrt(x) kt)/x (x - c) at x = n + c + 1 + l, where
// x - c = n + 1 + l >= 1 keeps everything regular.

std::array<double, kMaxOrder + 1> ThermalSeries::q1(double t) const {
  const double kt = abs_kappa_ * t;
  std::array<double, kMaxOrder + 1> out{};
  for (int l = 0; l <= kMaxOrder; ++l) {
    double sum = 0.0;
    for (int n = 0; n <= truncation_; ++n) {
      double gv = 1.0;
      if (n + l > 0) {
        const double s = std::sin(sq_[l][n] * kt);
        gv -= s * s * (n + l) / (n + c_ + l);
      }
      sum += weights_[n] * gv;
    }
    out[l] = sum;
  }
  return out;
}

std::array<double, kMaxOrder + 1> ThermalSeries::q2(double t) const {
  const double kt = abs_kappa_ * t;
  std::array<double, kMaxOrder + 1> out{};
  for (int l = 0; l <= kMaxOrder; ++l) {
    double sum = 0.0;
    for (int n = 0; n <= truncation_; ++n) {
      const double s = std::sin(sq_[l + 1][n] * kt);
      sum += weights_[n] * s * s * (n + 1 + l) / (n + c_ + 1 + l);
    }
    out[l] = sum;
  }
  return out;
}

CorrectionBreakdown ThermalSeries::breakdown(const ThermalPoint& thermal, double t) const {
  const auto v1 = q1(t);
  const auto v2 = q2(t);
  CorrectionBreakdown out;
  const double ct = std::cos(thermal.fermion_theta);
  const double st = std::sin(thermal.fermion_theta);
  const double cos2 = ct * ct;
  const double sin2 = st * st;
  double theta_pow_over_fact = 1.0;  // theta^n / n!
  for (int order = 0; order <= kMaxOrder; ++order) {
    if (order > 0) theta_pow_over_fact *= thermal.boson_theta / order;
    double p1 = 0.0;
    double p2 = 0.0;
    for (int l = 0; l <= order; ++l) {
      const double coef = correction_coefficient(order, l, alpha_);
      p1 += coef * v1[l];
      p2 += coef * v2[l];
    }
    out.raw[order][0] = p1;
    out.raw[order][1] = p2;
    out.weighted[order][0] = theta_pow_over_fact * cos2 * p1;
    out.weighted[order][1] = theta_pow_over_fact * sin2 * p2;
    out.pg_total += out.weighted[order][0] + out.weighted[order][1];
  }
  out.sigma_z = 1.0 - 2.0 * out.pg_total;
  return out;
}

double ThermalSeries::sigma_z(const ThermalPoint& thermal, double t) const {
  return breakdown(thermal, t).sigma_z;
}

std::pair<double, CorrectionBreakdown> sigma_z_thermal(const ModelParams& params,
                                                       const DerivedParams& derived,
                                                       const ThermalPoint& thermal, double t,
                                                       int truncation) {
  const ThermalSeries series(params, derived, truncation);
  CorrectionBreakdown b = series.breakdown(thermal, t);
  return {b.sigma_z, b};
}

std::pair<double, double> correction_range(int order, int kind, const ModelParams& params,
                                           const DerivedParams& derived, double theta,
                                           const TimeGrid& grid, int truncation) {
  check_order(order);
  check_kind(kind);
  const ThermalSeries series(params, derived, truncation);
  double weight = 1.0;
  for (int n = 1; n <= order; ++n) weight *= theta / n;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < grid.samples; ++i) {
    const double t = grid.at(i);
    const auto q = (kind == 1) ? series.q1(t) : series.q2(t);
    double p = 0.0;
    for (int l = 0; l <= order; ++l) {
      p += correction_coefficient(order, l, params.alpha) * q[l];
    }
    const double v = weight * p;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

double truncation_residual(const ModelParams& params, const DerivedParams& derived,
                           const ThermalPoint& thermal, const TimeGrid& grid, int truncation) {
  const ThermalSeries base(params, derived, truncation);
  const ThermalSeries finer(params, derived, truncation + 50);
  double worst = 0.0;
  for (int i = 0; i < grid.samples; ++i) {
    const double t = grid.at(i);
    worst = std::max(worst, std::abs(base.sigma_z(thermal, t) - finer.sigma_z(thermal, t)));
  }
  return worst;
}

}  // namespace tjcm
