#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "thermal_jcm/zero_temp.hpp"

using namespace tjcm;

namespace {
const ModelParams kFig{2.0, 4.0, 1.0, 4.0};  // alpha=4, c=1 regime
}

TEST_CASE("pg_zero trivial points") {
  const ModelParams vac{2.0, 4.0, 1.0, 0.0};
  const DerivedParams d = derive(vac);
  for (double t : {0.0, 0.5, 3.0, 12.0}) {
    CHECK(pg_zero(vac, d, t) == doctest::Approx(1.0).epsilon(1e-13));
  }
  const DerivedParams df = derive(kFig);
  CHECK(pg_zero(kFig, df, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  // bounded by the truncation residue
  for (double t = 0.0; t < 30.0; t += 0.37) {
    const double p = pg_zero(kFig, df, t);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0 + 1e-12);
  }
}

TEST_CASE("sigma_z_zero trivial points") {
  const DerivedParams d = derive(kFig);
  CHECK(sigma_z_zero(kFig, d, 0.0) == doctest::Approx(-1.0).epsilon(1e-12));
  const ModelParams vac{2.0, 4.0, 1.0, 0.0};
  const DerivedParams dv = derive(vac);
  CHECK(sigma_z_zero(vac, dv, 7.7) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("envelope approximation") {
  CHECK(envelope_approx(4.0, 1.0, 0.0) == doctest::Approx(-1.0).epsilon(1e-15));
  // the envelope factor returns to one after a full revival period
  const double t_rev = 2.0 * M_PI * 4.0;
  const double env = std::exp(16.0 * (std::cos(t_rev / 4.0) - 1.0));
  CHECK(env == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(envelope_approx(4.0, 1.0, t_rev) == doctest::Approx(-1.0).epsilon(1e-9));

  // collapse-regime agreement against the brute-force sum, resonant case
  const ModelParams res{1.0, 1.0, 1.0, 4.0};
  const DerivedParams d = derive(res);
  double worst = 0.0;
  for (int i = 0; i <= 600; ++i) {
    const double t = 3.0 * i / 600.0;
    worst = std::max(worst,
                     std::abs(envelope_approx(4.0, 1.0, t) - sigma_z_zero(res, d, t, 400)));
  }
  CHECK(worst < 0.08);  // measured 0.0505
}

TEST_CASE("timescale estimates") {
  const TimescaleEstimate a = timescales(kFig, 0.0);
  CHECK(a.collapse == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(a.revival == doctest::Approx(8.0 * M_PI).epsilon(1e-15));
  CHECK(a.rabi == doctest::Approx(M_PI / 4.0).epsilon(1e-15));
  CHECK(a.revival_thermal == a.revival);

  const TimescaleEstimate b = timescales(kFig, M_PI / 32);
  CHECK(b.revival_thermal == doctest::Approx(8.0 * M_PI * std::exp(M_PI / 32)).epsilon(1e-15));

  ModelParams alpha8 = kFig;
  alpha8.alpha = 8.0;
  const TimescaleEstimate c = timescales(alpha8, M_PI / 60);
  CHECK(c.revival_thermal == doctest::Approx(16.0 * M_PI * std::exp(M_PI / 60)).epsilon(1e-15));

  CHECK_THROWS_AS(timescales({1.0, 1.0, 0.0, 1.0}, 0.0), DomainError);
  CHECK_THROWS_AS(timescales({1.0, 1.0, 1.0, 0.0}, 0.0), DomainError);
}

TEST_CASE("spectrum rows and bare level") {
  const DerivedParams d = derive(kFig);
  const Spectrum sp = spectrum(kFig, d, 10);
  CHECK(sp.E00 == doctest::Approx(-1.0).epsilon(1e-15));  // -omega0/2
  for (const auto& row : sp.rows) {
    CHECK(row.E_n1 - row.E_n2 == doctest::Approx(2.0 * row.lambda_n).epsilon(1e-14));
  }
  // lambda strictly increasing
  for (std::size_t i = 1; i < sp.rows.size(); ++i) {
    CHECK(sp.rows[i].lambda_n > sp.rows[i - 1].lambda_n);
  }
  // resonance: lambda_n = |kappa| sqrt(n+1)
  const ModelParams res{1.0, 1.0, 2.0, 0.0};
  const Spectrum spr = spectrum(res, derive(res), 5);
  for (const auto& row : spr.rows) {
    CHECK(row.lambda_n == doctest::Approx(2.0 * std::sqrt(row.n + 1.0)).epsilon(1e-14));
  }
}

TEST_CASE("spectrum matches the dressed two-by-two block") {
  const ModelParams params{1.5, 2.3, 0.8, 0.0};
  const DerivedParams d = derive(params);
  const Spectrum sp = spectrum(params, d, 8);
  for (const auto& row : sp.rows) {
    Eigen::Matrix2d block;
    const double k = params.kappa * std::sqrt(row.n + 1.0);
    block << params.omega * (row.n + 1) - params.omega0 / 2, k, k,
        params.omega * row.n + params.omega0 / 2;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(block);
    CHECK(row.E_n2 == doctest::Approx(eig.eigenvalues()[0]).epsilon(1e-12));
    CHECK(row.E_n1 == doctest::Approx(eig.eigenvalues()[1]).epsilon(1e-12));
    // mixing angle from the upper-branch eigenvector (|n+1,g>, |n,e>)
    const auto v = eig.eigenvectors().col(1);
    const double angle = std::atan2(std::abs(v[1]), std::abs(v[0]));
    CHECK(row.theta_n == doctest::Approx(angle).epsilon(1e-12));
  }
}

TEST_CASE("ground state index") {
  const ModelParams res{1.0, 1.0, 1.0, 0.0};
  const GroundState uncoupled = ground_state_index(res, 0.0);
  CHECK(uncoupled.bare());
  CHECK(uncoupled.energy == doctest::Approx(-0.5).epsilon(1e-15));

  const GroundState strong = ground_state_index(res, 10.0);
  CHECK(strong.n == 24);
  CHECK(strong.energy == doctest::Approx(24.5 - 50.0).epsilon(1e-13));

  // brute-force argmin over n <= 200 as the oracle for kappa = 3
  int best_n = -1;
  double best = -0.5;
  for (int n = 0; n <= 200; ++n) {
    const double e = (n + 0.5) - 3.0 * std::sqrt(n + 1.0);
    if (e < best) {
      best = e;
      best_n = n;
    }
  }
  const GroundState mid = ground_state_index(res, 3.0);
  CHECK(mid.n == best_n);
  CHECK(mid.n == 1);

  // invariant under a global energy shift: argmin of shifted levels agrees
  double shifted_best = -0.5 + 7.3;
  int shifted_n = -1;
  for (int n = 0; n <= 200; ++n) {
    const double e = (n + 0.5) - 3.0 * std::sqrt(n + 1.0) + 7.3;
    if (e < shifted_best) {
      shifted_best = e;
      shifted_n = n;
    }
  }
  CHECK(shifted_n == mid.n);
}

TEST_CASE("ground state boundary guard") {
  const ModelParams res{1.0, 1.0, 1.0, 0.0};
  CHECK_THROWS_AS(ground_state_index(res, 10.0, 24), GuardError);
}

TEST_CASE("excitation gap") {
  const ModelParams res{1.0, 1.0, 1.0, 0.0};
  CHECK(excitation_gap(res, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(excitation_gap(res, 3.0) >= 0.0);
}

TEST_CASE("short-time inversion law") {
  CHECK(short_time_inversion(3.0, 0.7, 2.0, 0.0) == 1.0);
  const double kt = 0.04;
  CHECK(short_time_inversion(0.0, 0.3, 1.0, kt) ==
        doctest::Approx(1.0 - 2.0 * kt * kt).epsilon(1e-14));
  CHECK(short_time_inversion(4.0, 0.0, 1.0, kt) ==
        doctest::Approx(1.0 - 2.0 * kt * kt * 17.0).epsilon(1e-14));
  // thermal variant rescales nbar by e^{2 theta}
  const double theta = 0.2;
  CHECK(short_time_inversion(4.0, 0.0, 1.0, kt, theta) ==
        doctest::Approx(1.0 - 2.0 * kt * kt * (16.0 * std::exp(2 * theta) + 1.0))
            .epsilon(1e-14));
}
