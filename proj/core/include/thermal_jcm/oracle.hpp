#pragma once

#include <string>
#include <vector>

#include "thermal_jcm/fock.hpp"
#include "thermal_jcm/model.hpp"

// Brute-force truncated-Fock machinery: the thermal ground-state
// probability evaluated with no expansion in theta, exact TFD state
// constructions, the operator-identity catalog, and the short-time
// coefficient extracted from evolution under the full dipole Hamiltonian.
// Everything here exists to check the series modules from an independent
// route.

namespace tjcm {

// Truncated coherent state; errors when the Poisson tail beyond dim
// exceeds 1e-10.
FockVector coherent_vector(double alpha, int dim);
FockVector coherent_vector(Complex alpha, int dim);

// Product state |a> |b~> on the doubled (register 0 = physical,
// register 1 = tilde) space.
FockVector two_mode_product(const FockVector& a, const FockVector& b);

// Applies the thermal Bogoliubov unitary exp[-theta (a a~ - a~^dag a^dag)]
// by stepped series action of the generator. Norm is preserved to series
// tolerance; trips a guard when amplitude reaches the truncation edge.
FockVector two_mode_squeeze_apply(double theta, const FockVector& state,
                                  const OracleConfig& config);

// cos^2(Theta) <Phi|G1|Phi> + sin^2(Theta) <Phi|G2|Phi> with
// |Phi> = U_B(theta)|alpha>|alpha~>; no theta-expansion anywhere.
double exact_pg(const ModelParams& params, const DerivedParams& derived,
                const ThermalPoint& thermal, double t, const OracleConfig& config);

// Same probability evaluated from the four fermion components of the
// evolved doubled state, before the tilde-unitarity elimination. Used to
// verify that elimination numerically.
double exact_pg_four_component(const ModelParams& params, const DerivedParams& derived,
                               const ThermalPoint& thermal, double t,
                               const OracleConfig& config);

enum class ThermalRegister { boson, fermion };

// Builds the thermal vacuum of the chosen statistics, traces out the
// tilde register and returns the max deviation of the reduced diagonal
// from the canonical-ensemble law (geometric for bosons, {cos^2, sin^2}
// for the two-level fermion).
double reduced_thermal_density_check(ThermalRegister which, double angle,
                                     const OracleConfig& config);

// <a^dag a> in U_B(theta)|alpha>|alpha~>; closed-form value is
// alpha^2 e^{2 theta} + sinh^2 theta.
double displaced_mean_photon(double alpha, double theta, const OracleConfig& config);

// Operator-identity catalog. Parameterised identities take the power n;
// fixed identities ignore it. Returns the max matrix-element deviation on
// the truncation-safe sub-block.
double verify_identity(const std::string& identity_id, int n, const OracleConfig& config);

struct IdentityInfo {
  std::string id;
  bool takes_power = false;
};

const std::vector<IdentityInfo>& identity_catalog();

// Runs every catalog identity (powers 1..max_power where applicable) and
// returns the worst deviation together with its id.
struct CatalogResult {
  std::string worst_id;
  int worst_power = 0;
  double worst_deviation = 0.0;
  std::vector<std::pair<std::string, double>> entries;
};
CatalogResult verify_all_identities(const OracleConfig& config, int max_power = 6);

// Quadratic coefficient q of <sigma_z(t)> ~ 1 + q t^2 for the initial
// state |alpha e^{i phi}>|e> evolved under the full counter-rotating
// Hamiltonian at resonance. Fit runs on a window << 1/kappa and guards on
// its residual.
double rabi_short_time_coefficient(const ModelParams& params, double alpha_mag, double phi,
                                   const OracleConfig& config);

// <alpha, alpha~| ad_K^order ( G_kind ) |alpha, alpha~> with
// K = a a~ - a~^dag a^dag: the defining n-fold commutator form of the
// order-n correction, evaluated with ladder matrices. Independent of the
// Q-series route.
double commutator_order_expectation(int order, int kind, const ModelParams& params,
                                    const DerivedParams& derived, double t,
                                    const OracleConfig& config);

}  // namespace tjcm
