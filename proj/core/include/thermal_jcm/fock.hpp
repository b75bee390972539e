#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "thermal_jcm/errors.hpp"

// Dense matrices over a truncated (possibly multi-register) Fock basis.
// Registers are ordered; a two-register space indexes basis states as
// i = n * dim + m with n the occupation of register 0.

namespace tjcm {

using Complex = std::complex<double>;
using FockMatrix = Eigen::MatrixXcd;
using FockVector = Eigen::VectorXcd;

struct OracleConfig {
  int dim = 48;              // per-register truncation
  double taylor_tol = 1e-12;  // exponential-action series tolerance and leakage threshold
  int safe_buffer = 8;       // excitation headroom excluded from identity comparisons
};

class FockBasis {
 public:
  FockBasis(int dim, int registers);

  int dim() const { return dim_; }
  int registers() const { return registers_; }
  long size() const { return size_; }  // dim^registers

  int occupation(long index, int reg) const;
  int total_excitation(long index) const;

  FockMatrix identity() const;
  FockMatrix lowering(int reg) const;
  FockMatrix raising(int reg) const;
  FockMatrix number(int reg) const;

  // Operator diagonal in the register-`reg` number basis with entries f(n).
  FockMatrix diagonal_fn(int reg, const std::function<Complex(int)>& f) const;

 private:
  int dim_;
  int registers_;
  long size_;
  std::vector<long> stride_;
};

// max|lhs - rhs| / max(1, |lhs|, |rhs|), all maxima taken over matrix
// elements whose row and column total excitation stays at or below
// dim - buffer. Ladder operators leak at the truncation edge; identities
// of the infinite space only hold inside this sub-block. The scale
// normalisation keeps the metric meaningful where entries grow like
// B^n and roundoff alone reaches 1e-7 absolute.
double safe_block_deviation(const FockBasis& basis, const FockMatrix& lhs, const FockMatrix& rhs,
                            int buffer);

FockMatrix commutator(const FockMatrix& a, const FockMatrix& b);

// Integer non-negative matrix power by repeated multiplication.
FockMatrix matrix_power(const FockMatrix& m, int n);

}  // namespace tjcm
