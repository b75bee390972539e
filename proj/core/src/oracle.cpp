#include "thermal_jcm/oracle.hpp"

#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <map>

#include "thermal_jcm/zero_temp.hpp"

namespace tjcm {

namespace {

constexpr Complex kI{0.0, 1.0};

// sin(sqrt(x) kt)/sqrt(x), regular at x = 0.
double sinc_sqrt(double x, double kt) {
  if (x < 1e-8) {
    const double xu = x * kt * kt;
    return kt * (1.0 - xu / 6.0 + xu * xu / 120.0);
  }
  const double r = std::sqrt(x);
  return std::sin(r * kt) / r;
}

// K = a a~ - a~^dag a^dag applied matrix-free to a two-mode vector.
FockVector apply_pair_lowering_minus_raising(const FockVector& v, int dim) {
  FockVector out = FockVector::Zero(v.size());
  for (int n = 0; n < dim; ++n) {
    for (int m = 0; m < dim; ++m) {
      Complex acc = 0.0;
      if (n + 1 < dim && m + 1 < dim) {
        acc += std::sqrt((n + 1.0) * (m + 1.0)) * v[(n + 1) * dim + (m + 1)];
      }
      if (n > 0 && m > 0) {
        acc -= std::sqrt(static_cast<double>(n) * m) * v[(n - 1) * dim + (m - 1)];
      }
      out[n * dim + m] = acc;
    }
  }
  return out;
}

// First-register number distribution of a two-mode vector.
std::vector<double> first_mode_distribution(const FockVector& v, int dim) {
  std::vector<double> pn(dim, 0.0);
  for (int n = 0; n < dim; ++n) {
    for (int m = 0; m < dim; ++m) {
      pn[n] += std::norm(v[n * dim + m]);
    }
  }
  return pn;
}

// (u (x) w) applied to a two-mode vector via the reshape
// M' = u M w^T, where M_{n m} is the amplitude of |n, m~>.
FockVector apply_two_mode(const FockMatrix& u, const FockMatrix& w, const FockVector& v,
                          int dim) {
  using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMat> m(v.data(), dim, dim);
  RowMat r = u * m * w.transpose();
  FockVector out(v.size());
  Eigen::Map<RowMat>(out.data(), dim, dim) = r;
  return out;
}

struct EvolutionBlocks {
  FockMatrix u00, u01, u10, u11;
};

// Interaction-picture evolution blocks on one mode: functions of the
// number operator times at most one ladder operator.
EvolutionBlocks evolution_blocks(const ModelParams& params, const DerivedParams& derived,
                                 double t, int dim) {
  const double kt = std::abs(params.kappa) * t;
  const double c = derived.c;
  const double detune = derived.delta_omega / (2.0 * std::abs(params.kappa));
  const double sgn = params.kappa >= 0.0 ? 1.0 : -1.0;
  const FockBasis basis(dim, 1);
  EvolutionBlocks b;
  b.u00 = basis.diagonal_fn(0, [&](int n) {
    const double x = n + c;
    return Complex(std::cos(std::sqrt(x) * kt), -detune * sinc_sqrt(x, kt));
  });
  b.u11 = basis.diagonal_fn(0, [&](int n) {
    const double x = n + c + 1;
    return Complex(std::cos(std::sqrt(x) * kt), detune * sinc_sqrt(x, kt));
  });
  const FockMatrix f01 = basis.diagonal_fn(0, [&](int n) {
    return Complex(sinc_sqrt(n + c, kt), 0.0);
  });
  const FockMatrix f10 = basis.diagonal_fn(0, [&](int n) {
    return Complex(sinc_sqrt(n + c + 1, kt), 0.0);
  });
  b.u01 = (-kI * sgn) * (f01 * basis.raising(0));
  b.u10 = (-kI * sgn) * (f10 * basis.lowering(0));
  return b;
}

}  // namespace

FockVector coherent_vector(Complex alpha, int dim) {
  if (dim < 2) throw DomainError("coherent_vector: dim must be >= 2");
  FockVector v(dim);
  v[0] = std::exp(-std::norm(alpha) / 2.0);
  for (int n = 1; n < dim; ++n) {
    v[n] = v[n - 1] * alpha / std::sqrt(static_cast<double>(n));
  }
  const double residue = std::max(0.0, 1.0 - v.squaredNorm());
  if (residue > 1e-10) {
    throw GuardError("coherent_vector: truncation residue above 1e-10; increase dim");
  }
  return v;
}

FockVector coherent_vector(double alpha, int dim) {
  return coherent_vector(Complex(alpha, 0.0), dim);
}

FockVector two_mode_product(const FockVector& a, const FockVector& b) {
  FockVector out(a.size() * b.size());
  for (long n = 0; n < a.size(); ++n) {
    for (long m = 0; m < b.size(); ++m) {
      out[n * b.size() + m] = a[n] * b[m];
    }
  }
  return out;
}

FockVector two_mode_squeeze_apply(double theta, const FockVector& state,
                                  const OracleConfig& config) {
  if (theta < 0.0) throw DomainError("two_mode_squeeze_apply: theta must be >= 0");
  const int dim = config.dim;
  if (static_cast<long>(dim) * dim != state.size()) {
    throw DomainError("two_mode_squeeze_apply: state size must be dim^2");
  }
  // Step the angle so each Taylor burst converges in a handful of terms.
  const int steps = std::max(1, static_cast<int>(std::ceil(theta / 0.05)));
  const double step = theta / steps;
  constexpr int kMaxTerms = 200;

  FockVector out = state;
  for (int s = 0; s < steps; ++s) {
    // exp[-step K] with K = a a~ - a~^dag a^dag
    FockVector term = out;
    FockVector acc = out;
    bool converged = false;
    for (int k = 1; k <= kMaxTerms; ++k) {
      term = (-step / k) * apply_pair_lowering_minus_raising(term, dim);
      acc += term;
      if (term.norm() <= config.taylor_tol * acc.norm()) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw GuardError("two_mode_squeeze_apply: series did not converge; increase dim");
    }
    out = std::move(acc);
  }

  double edge_mass = 0.0;
  for (int n = 0; n < dim; ++n) {
    edge_mass += std::norm(out[n * dim + (dim - 1)]);
    if (n != dim - 1) edge_mass += std::norm(out[(dim - 1) * dim + n]);
  }
  if (edge_mass > config.taylor_tol) {
    throw GuardError("two_mode_squeeze_apply: truncation-edge leakage; increase dim");
  }
  return out;
}

double exact_pg(const ModelParams& params, const DerivedParams& derived,
                const ThermalPoint& thermal, double t, const OracleConfig& config) {
  const FockVector single = coherent_vector(params.alpha, config.dim);
  const FockVector pair = two_mode_product(single, single);
  const FockVector phi = two_mode_squeeze_apply(thermal.boson_theta, pair, config);
  const auto pn = first_mode_distribution(phi, config.dim);

  double e1 = 0.0;
  double e2 = 0.0;
  for (int n = 0; n < config.dim; ++n) {
    e1 += pn[n] * g1(n + derived.c, derived.c, params.kappa, t);
    e2 += pn[n] * g2(n + derived.c + 1, derived.c, params.kappa, t);
  }
  const double ct = std::cos(thermal.fermion_theta);
  const double st = std::sin(thermal.fermion_theta);
  return ct * ct * e1 + st * st * e2;
}

double exact_pg_four_component(const ModelParams& params, const DerivedParams& derived,
                               const ThermalPoint& thermal, double t,
                               const OracleConfig& config) {
  const int dim = config.dim;
  const FockVector single = coherent_vector(params.alpha, dim);
  const FockVector phi =
      two_mode_squeeze_apply(thermal.boson_theta, two_mode_product(single, single), config);

  const EvolutionBlocks u = evolution_blocks(params, derived, t, dim);
  // The tilde evolution runs with the opposite phase: its block matrix is
  // the adjoint of the physical-mode one, transposed blockwise.
  const FockMatrix ut11 = u.u11.adjoint();
  const FockMatrix ut10 = u.u01.adjoint();
  const FockMatrix ut01 = u.u10.adjoint();
  const FockMatrix ut00 = u.u00.adjoint();

  const double ct = std::cos(thermal.fermion_theta);
  const double st = std::sin(thermal.fermion_theta);
  const FockVector psi_g_gt =
      st * apply_two_mode(u.u01, ut01, phi, dim) + ct * apply_two_mode(u.u00, ut00, phi, dim);
  const FockVector psi_g_et =
      st * apply_two_mode(u.u01, ut11, phi, dim) + ct * apply_two_mode(u.u00, ut10, phi, dim);
  return psi_g_gt.squaredNorm() + psi_g_et.squaredNorm();
}

double reduced_thermal_density_check(ThermalRegister which, double angle,
                                     const OracleConfig& config) {
  if (which == ThermalRegister::fermion) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    // cos|0,0~> + sin|1,1~> on the 2x2 doubled space
    Eigen::Matrix2cd m;
    m << c, 0.0, 0.0, s;
    const Eigen::Matrix2cd rho = m * m.adjoint();
    Eigen::Matrix2cd expected = Eigen::Matrix2cd::Zero();
    expected(0, 0) = c * c;
    expected(1, 1) = s * s;
    return (rho - expected).cwiseAbs().maxCoeff();
  }

  const int dim = config.dim;
  FockVector vac = FockVector::Zero(static_cast<long>(dim) * dim);
  vac[0] = 1.0;
  const FockVector tv = two_mode_squeeze_apply(angle, vac, config);
  using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMat> m(tv.data(), dim, dim);
  const FockMatrix rho = m * m.adjoint();

  const double tau2 = std::tanh(angle) * std::tanh(angle);
  FockMatrix expected = FockMatrix::Zero(dim, dim);
  double p = 1.0 - tau2;
  for (int n = 0; n < dim; ++n) {
    expected(n, n) = p;
    p *= tau2;
  }
  return (rho - expected).cwiseAbs().maxCoeff();
}

double displaced_mean_photon(double alpha, double theta, const OracleConfig& config) {
  const FockVector single = coherent_vector(alpha, config.dim);
  const FockVector phi =
      two_mode_squeeze_apply(theta, two_mode_product(single, single), config);
  const auto pn = first_mode_distribution(phi, config.dim);
  double mean = 0.0;
  for (int n = 0; n < config.dim; ++n) mean += n * pn[n];
  return mean;
}

namespace {

// The catalog operators are all banded in the two-mode Fock lattice, so
// the identity checks run on sparse matrices; the dense FockMatrix type
// stays the representation for states and evolution blocks.
using SpMat = Eigen::SparseMatrix<Complex>;

SpMat sparse_commutator(const SpMat& a, const SpMat& b) {
  return SpMat(a * b - b * a);
}

SpMat sparse_power(const SpMat& m, int n) {
  SpMat result(m.rows(), m.cols());
  result.setIdentity();
  for (int i = 0; i < n; ++i) result = SpMat(result * m);
  return result;
}

struct IdentityOps {
  FockBasis basis;
  SpMat a, at, b, bt;  // ladder on physical and tilde registers
  SpMat mu, nu, A, B, C, D, I;
  double c;

  IdentityOps(int dim, double c_in) : basis(dim, 2), c(c_in) {
    const long size = basis.size();
    auto build = [&](int reg, bool raise) {
      std::vector<Eigen::Triplet<Complex>> trip;
      trip.reserve(size);
      for (long i = 0; i < size; ++i) {
        const int n = basis.occupation(i, reg);
        const long stride = reg == 0 ? dim : 1;
        if (raise) {
          if (n + 1 < dim) trip.emplace_back(i + stride, i, std::sqrt(n + 1.0));
        } else {
          if (n > 0) trip.emplace_back(i - stride, i, std::sqrt(static_cast<double>(n)));
        }
      }
      SpMat m(size, size);
      m.setFromTriplets(trip.begin(), trip.end());
      return m;
    };
    a = build(0, false);
    at = build(0, true);
    b = build(1, false);
    bt = build(1, true);
    mu = SpMat(at * bt);
    nu = SpMat(a * b);
    A = SpMat(mu - nu);
    C = SpMat(mu + nu);
    B = diagonal([&](long i) { return basis.occupation(i, 0) + c; });
    D = diagonal([&](long i) {
      return basis.occupation(i, 0) + basis.occupation(i, 1) + 1.0;
    });
    I = diagonal([](long) { return 1.0; });
  }

  SpMat diagonal(const std::function<double(long)>& f) const {
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(basis.size());
    for (long i = 0; i < basis.size(); ++i) trip.emplace_back(i, i, f(i));
    SpMat m(basis.size(), basis.size());
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
  }

  // (B + s)^n; B is diagonal so the power acts entrywise.
  SpMat bpow(double s, int n) const {
    return diagonal([&](long i) {
      return std::pow(basis.occupation(i, 0) + c + s, static_cast<double>(n));
    });
  }
};

double sparse_safe_block_deviation(const FockBasis& basis, const SpMat& lhs, const SpMat& rhs,
                                   int buffer) {
  const int cap = basis.dim() - buffer;
  if (cap < 0) throw DomainError("sparse_safe_block_deviation: buffer larger than dim");
  const SpMat diff(lhs - rhs);
  double worst = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k) {
    for (SpMat::InnerIterator it(diff, k); it; ++it) {
      if (basis.total_excitation(it.row()) > cap) continue;
      if (basis.total_excitation(it.col()) > cap) continue;
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  double scale = 1.0;
  auto scan = [&](const SpMat& m) {
    for (int k = 0; k < m.outerSize(); ++k) {
      for (SpMat::InnerIterator it(m, k); it; ++it) {
        if (basis.total_excitation(it.row()) > cap) continue;
        if (basis.total_excitation(it.col()) > cap) continue;
        scale = std::max(scale, std::abs(it.value()));
      }
    }
  };
  scan(lhs);
  scan(rhs);
  return worst / scale;
}

// Defining form of S_n before the closed-form rearrangement.
SpMat s_n_defining(const IdentityOps& o, int n) {
  return SpMat(o.bpow(-1, n) * sparse_commutator(o.A, o.mu) -
               o.bpow(+1, n) * sparse_commutator(o.A, o.nu));
}

using IdentityFn = std::function<std::pair<SpMat, SpMat>(const IdentityOps&, int)>;

struct IdentityEntry {
  bool takes_power;
  int max_raise;  // largest total-excitation raise along any operator path
  IdentityFn build;
};

const std::map<std::string, IdentityEntry>& identity_table() {
  static const std::map<std::string, IdentityEntry> table = {
      {"comm_ladder",
       {false, 2,
        [](const IdentityOps& o, int) {
          return std::pair{sparse_commutator(o.a, o.at), o.I};
        }}},
      {"comm_A_B",
       {false, 2,
        [](const IdentityOps& o, int) {
          return std::pair{sparse_commutator(o.A, o.B), SpMat(-o.C)};
        }}},
      {"comm_A_B2",
       {false, 2,
        [](const IdentityOps& o, int) {
          return std::pair{sparse_commutator(o.A, o.bpow(0, 2)),
                           SpMat(o.A - SpMat(2.0 * o.B * o.C))};
        }}},
      {"comm_A_B3",
       {false, 2,
        [](const IdentityOps& o, int) {
          return std::pair{sparse_commutator(o.A, o.bpow(0, 3)),
                           SpMat(SpMat(-o.C) + SpMat(3.0 * o.B * o.A) -
                                 SpMat(3.0 * o.bpow(0, 2) * o.C))};
        }}},
      {"comm_A_B4",
       {false, 2,
        [](const IdentityOps& o, int) {
          return std::pair{sparse_commutator(o.A, o.bpow(0, 4)),
                           SpMat(o.A - SpMat(4.0 * o.B * o.C) +
                                 SpMat(6.0 * o.bpow(0, 2) * o.A) -
                                 SpMat(4.0 * o.bpow(0, 3) * o.C))};
        }}},
      {"comm_A_Bn",
       {true, 2,
        [](const IdentityOps& o, int n) {
          return std::pair{sparse_commutator(o.A, o.bpow(0, n)),
                           SpMat(o.bpow(-1, n) * o.mu - o.bpow(+1, n) * o.nu -
                                 o.bpow(0, n) * o.A)};
        }}},
      {"comm_A_mu",
       {false, 2,
        [](const IdentityOps& o, int) {
          return std::pair{sparse_commutator(o.A, o.mu), SpMat(-o.D)};
        }}},
      {"comm_A_nu",
       {false, 2,
        [](const IdentityOps& o, int) {
          return std::pair{sparse_commutator(o.A, o.nu), SpMat(-o.D)};
        }}},
      {"comm_mu_nu",
       {false, 2,
        [](const IdentityOps& o, int) {
          return std::pair{sparse_commutator(o.mu, o.nu), SpMat(-o.D)};
        }}},
      {"comm_A_C",
       {false, 2,
        [](const IdentityOps& o, int) {
          return std::pair{sparse_commutator(o.A, o.C), SpMat(-2.0 * o.D)};
        }}},
      {"comm_A_D",
       {false, 2,
        [](const IdentityOps& o, int) {
          return std::pair{sparse_commutator(o.A, o.D), SpMat(-2.0 * o.C)};
        }}},
      {"s_n_closed_form",
       {true, 2,
        [](const IdentityOps& o, int n) {
          return std::pair{s_n_defining(o, n),
                           SpMat(SpMat(-(o.bpow(-1, n) - o.bpow(+1, n))) * o.D)};
        }}},
      // second-order rearrangements
      {"rearrange2_mu2",
       {true, 4,
        [](const IdentityOps& o, int n) {
          return std::pair{SpMat(o.bpow(-2, n) * o.mu * o.mu),
                           SpMat(o.mu * o.mu * o.bpow(0, n))};
        }}},
      {"rearrange2_damu",
       {true, 4,
        [](const IdentityOps& o, int n) {
          return std::pair{
              SpMat(o.bpow(-1, n) * SpMat(SpMat(-o.D) - o.mu * o.A - o.A * o.mu)),
              SpMat(SpMat(-2.0 * o.mu * o.mu * o.bpow(+1, n)) +
                    SpMat(2.0 * o.mu * o.bpow(0, n) * o.nu))};
        }}},
      {"rearrange2_a2",
       {true, 4,
        [](const IdentityOps& o, int n) {
          return std::pair{
              SpMat(o.bpow(0, n) * SpMat(o.A * o.A - o.nu * o.mu - o.mu * o.nu)),
              SpMat(SpMat(o.mu * o.mu * o.bpow(+2, n)) -
                    SpMat(4.0 * o.mu * o.bpow(+1, n) * o.nu) -
                    SpMat(2.0 * o.bpow(0, n) * o.D) + SpMat(o.bpow(0, n) * o.nu * o.nu))};
        }}},
      {"rearrange2_danu",
       {true, 4,
        [](const IdentityOps& o, int n) {
          return std::pair{
              SpMat(o.bpow(+1, n) * SpMat(o.D + o.nu * o.A + o.A * o.nu)),
              SpMat(SpMat(2.0 * o.mu * o.bpow(+2, n) * o.nu) -
                    SpMat(2.0 * o.bpow(+1, n) * o.nu * o.nu) +
                    SpMat(2.0 * o.bpow(+1, n) * o.D))};
        }}},
      // third-order rearrangements
      {"rearrange3_mu3",
       {true, 6,
        [](const IdentityOps& o, int n) {
          return std::pair{SpMat(o.bpow(0, n) * sparse_power(o.mu, 3)),
                           SpMat(sparse_power(o.mu, 3) * o.bpow(+3, n))};
        }}},
      {"rearrange3_mu2nu",
       {true, 4,
        [](const IdentityOps& o, int n) {
          return std::pair{SpMat(o.bpow(0, n) * o.mu * o.mu * o.nu),
                           SpMat(o.mu * o.mu * o.bpow(+2, n) * o.nu)};
        }}},
      {"rearrange3_munumu",
       {true, 4,
        [](const IdentityOps& o, int n) {
          return std::pair{SpMat(o.bpow(0, n) * o.mu * o.nu * o.mu),
                           SpMat(SpMat(o.mu * o.mu * o.bpow(+2, n) * o.nu) +
                                 SpMat(o.mu * o.bpow(+1, n) * o.D))};
        }}},
      {"rearrange3_munu2",
       {true, 2,
        [](const IdentityOps& o, int n) {
          return std::pair{SpMat(o.bpow(0, n) * o.mu * o.nu * o.nu),
                           SpMat(o.mu * o.bpow(+1, n) * o.nu * o.nu)};
        }}},
      {"rearrange3_numu2",
       {true, 4,
        [](const IdentityOps& o, int n) {
          return std::pair{
              SpMat(o.bpow(0, n) * o.nu * o.mu * o.mu),
              SpMat(SpMat(o.mu * o.mu * o.bpow(+2, n) * o.nu) +
                    SpMat(2.0 * o.mu * o.bpow(+1, n) * SpMat(o.D + o.I)))};
        }}},
      {"rearrange3_numunu",
       {true, 2,
        [](const IdentityOps& o, int n) {
          return std::pair{SpMat(o.bpow(0, n) * o.nu * o.mu * o.nu),
                           SpMat(SpMat(o.mu * o.bpow(+1, n) * o.nu * o.nu) +
                                 SpMat(o.bpow(0, n) * o.D * o.nu))};
        }}},
      {"rearrange3_nu2mu",
       {true, 2,
        [](const IdentityOps& o, int n) {
          return std::pair{
              SpMat(o.bpow(0, n) * o.nu * o.nu * o.mu),
              SpMat(SpMat(o.mu * o.bpow(+1, n) * o.nu * o.nu) +
                    SpMat(2.0 * o.bpow(0, n) * SpMat(o.D + o.I) * o.nu))};
        }}},
      {"rearrange3_dmu",
       {true, 2,
        [](const IdentityOps& o, int n) {
          return std::pair{SpMat(o.bpow(0, n) * o.D * o.mu),
                           SpMat(o.mu * o.bpow(+1, n) * SpMat(o.D + 2.0 * o.I))};
        }}},
      {"rearrange3_mu",
       {true, 2,
        [](const IdentityOps& o, int n) {
          return std::pair{SpMat(o.bpow(0, n) * o.mu), SpMat(o.mu * o.bpow(+1, n))};
        }}},
      {"rearrange3_ad",
       {true, 2,
        [](const IdentityOps& o, int n) {
          return std::pair{SpMat(o.bpow(0, n) * o.A * o.D),
                           SpMat(SpMat(o.mu * o.bpow(+1, n) * o.D) -
                                 SpMat(o.bpow(0, n) * SpMat(o.D + 2.0 * o.I) * o.nu))};
        }}},
      {"rearrange3_da",
       {true, 2,
        [](const IdentityOps& o, int n) {
          return std::pair{SpMat(o.bpow(0, n) * o.D * o.A),
                           SpMat(SpMat(o.mu * o.bpow(+1, n) * SpMat(o.D + 2.0 * o.I)) -
                                 SpMat(o.bpow(0, n) * o.D * o.nu))};
        }}},
      {"rearrange_nu_d",
       {false, 2,
        [](const IdentityOps& o, int) {
          return std::pair{SpMat(o.nu * o.D), SpMat(SpMat(o.D + 2.0 * o.I) * o.nu)};
        }}},
  };
  return table;
}

// Representative parameter point for the scalar tilde-unitarity check:
// the figure regime with a moderate displacement and temperature. The
// displaced squeezed state needs more headroom than the matrix identities,
// so the dim floor is higher here.
double tilde_unitarity_deviation(const OracleConfig& config) {
  OracleConfig local = config;
  local.dim = std::max(config.dim, 32);
  ModelParams params;
  params.omega0 = 2.0;
  params.omega = 4.0;
  params.kappa = 1.0;
  params.alpha = 1.2;
  const DerivedParams derived = derive(params);
  ThermalPoint thermal;
  thermal.boson_theta = 0.25;
  thermal.fermion_theta = 0.4;
  thermal.beta = theta_to_beta(0.25, params.omega);
  double worst = 0.0;
  for (double t : {0.0, 0.9, 1.7, 3.1}) {
    const double reduced = exact_pg(params, derived, thermal, t, local);
    const double four = exact_pg_four_component(params, derived, thermal, t, local);
    worst = std::max(worst, std::abs(reduced - four));
  }
  return worst;
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> catalog = [] {
    std::vector<IdentityInfo> out;
    for (const auto& [id, entry] : identity_table()) {
      out.push_back({id, entry.takes_power});
    }
    out.push_back({"tilde_unitarity_reduction", false});
    return out;
  }();
  return catalog;
}

double verify_identity(const std::string& identity_id, int n, const OracleConfig& config) {
  if (identity_id == "tilde_unitarity_reduction") {
    return tilde_unitarity_deviation(config);
  }
  const auto& table = identity_table();
  const auto it = table.find(identity_id);
  if (it == table.end()) {
    throw DomainError("verify_identity: unknown identity '" + identity_id + "'");
  }
  const IdentityEntry& entry = it->second;
  if (entry.takes_power && n < 1) {
    throw DomainError("verify_identity: power n must be >= 1");
  }
  if (config.safe_buffer < entry.max_raise) {
    throw GuardError("verify_identity: safe_buffer too small for this identity; increase dim");
  }
  // B carries a non-integer detuning offset so no term cancels by accident.
  const IdentityOps ops(config.dim, 0.7);
  const auto [lhs, rhs] = entry.build(ops, entry.takes_power ? n : 0);
  return sparse_safe_block_deviation(ops.basis, lhs, rhs, config.safe_buffer);
}

CatalogResult verify_all_identities(const OracleConfig& config, int max_power) {
  CatalogResult result;
  for (const auto& info : identity_catalog()) {
    const int n_hi = info.takes_power ? max_power : 1;
    for (int n = 1; n <= n_hi; ++n) {
      const double dev = verify_identity(info.id, n, config);
      std::string key = info.id;
      if (info.takes_power) key += "[n=" + std::to_string(n) + "]";
      result.entries.emplace_back(key, dev);
      if (dev > result.worst_deviation) {
        result.worst_deviation = dev;
        result.worst_id = info.id;
        result.worst_power = info.takes_power ? n : 0;
      }
    }
  }
  return result;
}

double rabi_short_time_coefficient(const ModelParams& params, double alpha_mag, double phi,
                                   const OracleConfig& config) {
  if (params.omega != params.omega0) {
    throw DomainError("rabi_short_time_coefficient: requires resonance omega = omega0");
  }
  const int dim = config.dim;
  const int size = 2 * dim;  // index 2n + s, s = 0 excited / 1 ground

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(size, size);
  for (int n = 0; n < dim; ++n) {
    h(2 * n, 2 * n) = params.omega0 / 2.0 + params.omega * n;
    h(2 * n + 1, 2 * n + 1) = -params.omega0 / 2.0 + params.omega * n;
  }
  // kappa (sigma- + sigma+)(a + a^dag): flips the atom, shifts the photon
  for (int n = 0; n + 1 < dim; ++n) {
    const double amp = params.kappa * std::sqrt(n + 1.0);
    for (int s = 0; s < 2; ++s) {
      h(2 * (n + 1) + (1 - s), 2 * n + s) = amp;
      h(2 * n + s, 2 * (n + 1) + (1 - s)) = amp;
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
  if (eig.info() != Eigen::Success) {
    throw GuardError("rabi_short_time_coefficient: eigensolver failed");
  }

  const Complex amp_alpha = alpha_mag * std::exp(kI * phi);
  const FockVector field = coherent_vector(amp_alpha, dim);
  FockVector psi0 = FockVector::Zero(size);
  for (int n = 0; n < dim; ++n) psi0[2 * n] = field[n];

  const FockVector modes = eig.eigenvectors().transpose().cast<Complex>() * psi0;

  const double window = 0.03 / std::abs(params.kappa);
  constexpr int kPoints = 24;
  Eigen::Matrix2d ata = Eigen::Matrix2d::Zero();
  Eigen::Vector2d atb = Eigen::Vector2d::Zero();
  std::vector<double> ts(kPoints), ys(kPoints);
  for (int j = 0; j < kPoints; ++j) {
    const double t = window * (j + 1) / kPoints;
    FockVector psit = FockVector::Zero(size);
    for (int k = 0; k < size; ++k) {
      const Complex phase = std::exp(-kI * eig.eigenvalues()[k] * t);
      psit += phase * modes[k] * eig.eigenvectors().col(k).cast<Complex>();
    }
    double sz = 0.0;
    for (int n = 0; n < dim; ++n) {
      sz += std::norm(psit[2 * n]) - std::norm(psit[2 * n + 1]);
    }
    ts[j] = t;
    ys[j] = sz - 1.0;
    const Eigen::Vector2d row(t * t, t * t * t);
    ata += row * row.transpose();
    atb += row * ys[j];
  }
  // y = q t^2 + s t^3; the cubic soaks up the leading odd remainder
  const Eigen::Vector2d sol = ata.ldlt().solve(atb);
  double rss = 0.0;
  double scale = 0.0;
  for (int j = 0; j < kPoints; ++j) {
    const double fitv = sol[0] * ts[j] * ts[j] + sol[1] * ts[j] * ts[j] * ts[j];
    rss += (ys[j] - fitv) * (ys[j] - fitv);
    scale = std::max(scale, std::abs(ys[j]));
  }
  const double rms = std::sqrt(rss / kPoints);
  if (rms > 0.01 * std::max(scale, 1e-12)) {
    throw GuardError("rabi_short_time_coefficient: fit residual too large; shrink window or increase dim");
  }
  return sol[0];
}

double commutator_order_expectation(int order, int kind, const ModelParams& params,
                                    const DerivedParams& derived, double t,
                                    const OracleConfig& config) {
  if (order < 0 || order > 8) throw DomainError("commutator_order_expectation: order 0..8");
  if (kind != 1 && kind != 2) throw DomainError("commutator_order_expectation: kind 1 or 2");
  const int dim = config.dim;
  const FockVector single = coherent_vector(params.alpha, dim);
  std::vector<FockVector> powers;
  powers.push_back(two_mode_product(single, single));
  for (int k = 0; k < order; ++k) {
    powers.push_back(apply_pair_lowering_minus_raising(powers.back(), dim));
  }

  std::vector<double> g(dim);
  for (int n = 0; n < dim; ++n) {
    g[n] = (kind == 1) ? g1(n + derived.c, derived.c, params.kappa, t)
                       : g2(n + derived.c + 1, derived.c, params.kappa, t);
  }
  auto weighted_inner = [&](const FockVector& x, const FockVector& y) {
    Complex acc = 0.0;
    for (int n = 0; n < dim; ++n) {
      for (int m = 0; m < dim; ++m) {
        acc += std::conj(x[n * dim + m]) * g[n] * y[n * dim + m];
      }
    }
    return acc;
  };

  // ad_K^n(G) expanded binomially; K is anti-hermitian so the adjoint
  // powers fold into a global sign.
  double binom = 1.0;
  Complex total = 0.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) binom = binom * (order - k + 1) / k;
    total += binom * weighted_inner(powers[order - k], powers[k]);
  }
  const double sign = (order % 2 == 0) ? 1.0 : -1.0;
  return sign * total.real();
}

}  // namespace tjcm
