#include <doctest.h>

#include <cmath>
#include <random>

#include "thermal_jcm/model.hpp"

using namespace tjcm;

namespace {

// Independent high-precision evaluation of g1/g2 through term-by-term
// Taylor summation of cos and sin; never calls the library trig path.
double taylor_cos(double u) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= -u * u / ((2 * k - 1) * (2 * k));
    sum += term;
  }
  return sum;
}

double taylor_sin(double u) {
  double term = u;
  double sum = u;
  for (int k = 1; k < 60; ++k) {
    term *= -u * u / ((2 * k) * (2 * k + 1));
    sum += term;
  }
  return sum;
}

double g1_oracle(double x, double c, double kt) {
  const double u = std::sqrt(x) * kt;
  const double co = taylor_cos(u);
  const double si = taylor_sin(u);
  return co * co + c * si * si / x;
}

double g2_oracle(double x, double c, double kt) {
  const double u = std::sqrt(x) * kt;
  const double si = taylor_sin(u);
  return si * si / x * (x - c);
}

}  // namespace

TEST_CASE("derive computes detuning and c") {
  const DerivedParams d1 = derive({2.0, 4.0, 1.0, 4.0});
  CHECK(d1.delta_omega == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(d1.c == doctest::Approx(1.0).epsilon(1e-15));

  const DerivedParams d2 = derive({1.0, 1.0, 1.0, 0.0});
  CHECK(d2.delta_omega == 0.0);
  CHECK(d2.c == 0.0);

  const DerivedParams d3 = derive({2.0, 6.0, 2.0, 0.0});
  CHECK(d3.delta_omega == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(d3.c == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(derive({1.0, 1.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(derive({-1.0, 1.0, 1.0, 0.0}), DomainError);
}

TEST_CASE("g1 special points") {
  // x=1, c=1, |kappa| t = pi/2: cos term dies, sine term is c/x
  CHECK(g1(1.0, 1.0, 1.0, M_PI / 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(g1(3.7, 0.4, 2.0, 0.0) == 1.0);
  CHECK(g1(0.0, 0.0, 1.0, 5.0) == 1.0);
  // Frozen against the independent Taylor-series trig oracle.
  CHECK(g1(2.0, 1.0, 1.0, 1.3) == doctest::Approx(0.53497907500321439).epsilon(1e-14));
  CHECK(g1(2.0, 1.0, 1.0, 1.3) == doctest::Approx(g1_oracle(2.0, 1.0, 1.3)).epsilon(1e-13));
  CHECK_THROWS_AS(g1(-0.1, 0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("g2 special points") {
  CHECK(g2(5.0, 2.0, 1.0, 0.0) == 0.0);
  for (double t : {0.3, 1.0, 2.7}) {
    CHECK(g2(1.5, 1.5, 1.0, t) == doctest::Approx(0.0).epsilon(1e-15));
  }
  CHECK(g2(2.0, 1.0, 1.0, 0.7) == doctest::Approx(0.34944654972393165).epsilon(1e-14));
  CHECK(g2(2.0, 1.0, 1.0, 0.7) == doctest::Approx(g2_oracle(2.0, 1.0, 0.7)).epsilon(1e-13));
  CHECK_THROWS_AS(g2(-1e-9, 0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("g functions: removable singularity at x = 0") {
  const double kt = 1.7;
  // analytic limits
  CHECK(g1(0.0, 2.0, 1.0, kt) == doctest::Approx(1.0 + 2.0 * kt * kt).epsilon(1e-12));
  CHECK(g2(0.0, 2.0, 1.0, kt) == doctest::Approx(-2.0 * kt * kt).epsilon(1e-12));
  // series branch joins the direct formula smoothly
  CHECK(g1(1e-9, 2.0, 1.0, kt) == doctest::Approx(g1(1e-7, 2.0, 1.0, kt)).epsilon(1e-6));
}

TEST_CASE("g functions are entire: forward differences match analytic slope at 0+") {
  const double c = 1.3;
  const double kt = 0.9;
  const double u2 = kt * kt;
  const double d_g1 = -u2 - c * u2 * u2 / 3.0;  // d/dx at 0
  const double d_g2 = u2 + c * u2 * u2 / 3.0;
  double prev_err1 = 1e9;
  double prev_err2 = 1e9;
  for (double h : {1e-2, 1e-3, 1e-4}) {
    const double fd1 = (g1(h, c, 1.0, kt) - g1(0.0, c, 1.0, kt)) / h;
    const double fd2 = (g2(h, c, 1.0, kt) - g2(0.0, c, 1.0, kt)) / h;
    const double err1 = std::abs(fd1 - d_g1);
    const double err2 = std::abs(fd2 - d_g2);
    CHECK(err1 < prev_err1);  // O(h) convergence
    CHECK(err2 < prev_err2);
    prev_err1 = err1;
    prev_err2 = err2;
  }
  CHECK(prev_err1 < 1e-3);
  CHECK(prev_err2 < 1e-3);
}

TEST_CASE("g function bounds") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> xd(1e-6, 50.0);
  std::uniform_real_distribution<double> cd(0.0, 4.0);
  std::uniform_real_distribution<double> td(0.0, 40.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = xd(rng);
    const double c = cd(rng);
    const double t = td(rng);
    const double v1 = g1(x, c, 1.0, t);
    CHECK(v1 >= -1e-12);
    CHECK(v1 <= 1.0 + c / x + 1e-12);
    const double s = sin_sq_over_x(x, t);
    const double v2 = g2(x, c, 1.0, t);
    CHECK(v2 >= -c * s - 1e-12);
    CHECK(v2 <= x * s + 1e-12);
    if (x - c >= 1.0) CHECK(v2 >= -1e-12);
  }
}

TEST_CASE("thermal point matches the quasi-particle parameterisation") {
  const ModelParams params{2.0, 4.0, 1.0, 4.0};
  for (double beta : {0.3, 1.0, 2.5}) {
    const ThermalPoint tp = thermal_point(beta, params);
    // cosh(theta) = [1 - exp(-beta omega)]^{-1/2}
    const double cosh_expect = 1.0 / std::sqrt(1.0 - std::exp(-beta * params.omega));
    CHECK(std::cosh(tp.boson_theta) == doctest::Approx(cosh_expect).epsilon(1e-14));
    const double cos_expect = 1.0 / std::sqrt(1.0 + std::exp(-beta * params.omega0));
    CHECK(std::cos(tp.fermion_theta) == doctest::Approx(cos_expect).epsilon(1e-14));
  }
  // beta -> infinity: both angles vanish
  const ThermalPoint cold = thermal_point(1e6, params);
  CHECK(cold.boson_theta == 0.0);
  CHECK(cold.fermion_theta == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(thermal_point(0.0, params), DomainError);
  CHECK_THROWS_AS(thermal_point(-1.0, params), DomainError);
}

TEST_CASE("fermion angle at the figure temperatures") {
  const ModelParams params{2.0, 4.0, 1.0, 4.0};
  const ThermalPoint a = thermal_point_from_theta(M_PI / 32, params);
  CHECK(a.fermion_theta == doctest::Approx(0.30318251171499425).epsilon(1e-13));
  const ThermalPoint b = thermal_point_from_theta(M_PI / 60, params);
  CHECK(b.fermion_theta == doctest::Approx(0.22485078469614230).epsilon(1e-13));
}

TEST_CASE("theta -> beta -> theta round trip") {
  const ModelParams params{2.0, 4.0, 1.0, 0.0};
  for (double theta = 0.05; theta <= 3.0; theta += 0.07) {
    const double beta = theta_to_beta(theta, params.omega);
    const ThermalPoint tp = thermal_point(beta, params);
    CHECK(tp.boson_theta == doctest::Approx(theta).epsilon(1e-12));
  }
  CHECK_THROWS_AS(theta_to_beta(0.0, 1.0), DomainError);
}

TEST_CASE("tan^2(Theta) = tanh(theta) when omega = 2 omega0") {
  const ModelParams params{2.0, 4.0, 1.0, 0.0};
  for (double theta : {0.05, M_PI / 60, M_PI / 32, 0.4}) {
    const ThermalPoint tp = thermal_point_from_theta(theta, params);
    const double lhs = std::tan(tp.fermion_theta) * std::tan(tp.fermion_theta);
    CHECK(lhs == doctest::Approx(std::tanh(theta)).epsilon(1e-12));
  }
}

TEST_CASE("Poisson truncation residue at N = 100") {
  for (double alpha : {2.0, 4.0}) {
    const auto w = poisson_weights(alpha, 100);
    double sum = 0.0;
    for (double v : w) sum += v;
    CHECK(1.0 - sum < 1e-12);
  }
  // alpha = 8 places the Poisson mean at 64; the mass beyond n = 100 is
  // 1.18e-5, not negligible. N = 100 is still the published truncation.
  const auto w8 = poisson_weights(8.0, 100);
  double sum8 = 0.0;
  for (double v : w8) sum8 += v;
  CHECK(1.0 - sum8 < 2e-5);
  CHECK(1.0 - sum8 > 1e-6);
}

TEST_CASE("time grid arithmetic") {
  const TimeGrid grid{0.0, 20.0 * M_PI, 10001};
  CHECK(grid.dt() == doctest::Approx(20.0 * M_PI * 1e-4).epsilon(1e-15));
  CHECK(grid.at(0) == 0.0);
  CHECK(grid.at(10000) == doctest::Approx(20.0 * M_PI).epsilon(1e-15));
  const TimeGrid degenerate{3.0, 3.0, 1};
  CHECK(degenerate.dt() == 0.0);
  CHECK(degenerate.at(0) == 3.0);
}
