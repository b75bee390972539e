#include "thermal_jcm/fock.hpp"

#include <cmath>

namespace tjcm {

FockBasis::FockBasis(int dim, int registers) : dim_(dim), registers_(registers) {
  if (dim < 2) throw DomainError("FockBasis: dim must be >= 2");
  if (registers < 1 || registers > 4) throw DomainError("FockBasis: registers must be 1..4");
  size_ = 1;
  stride_.resize(registers_);
  // register 0 is the most significant digit
  for (int r = registers_ - 1; r >= 0; --r) {
    stride_[r] = size_;
    size_ *= dim_;
  }
}

int FockBasis::occupation(long index, int reg) const {
  return static_cast<int>((index / stride_[reg]) % dim_);
}

int FockBasis::total_excitation(long index) const {
  int total = 0;
  for (int r = 0; r < registers_; ++r) total += occupation(index, r);
  return total;
}

FockMatrix FockBasis::identity() const {
  return FockMatrix::Identity(size_, size_);
}

FockMatrix FockBasis::lowering(int reg) const {
  FockMatrix m = FockMatrix::Zero(size_, size_);
  for (long i = 0; i < size_; ++i) {
    const int n = occupation(i, reg);
    if (n > 0) m(i - stride_[reg], i) = std::sqrt(static_cast<double>(n));
  }
  return m;
}

FockMatrix FockBasis::raising(int reg) const {
  FockMatrix m = FockMatrix::Zero(size_, size_);
  for (long i = 0; i < size_; ++i) {
    const int n = occupation(i, reg);
    if (n + 1 < dim_) m(i + stride_[reg], i) = std::sqrt(n + 1.0);
  }
  return m;
}

FockMatrix FockBasis::number(int reg) const {
  FockMatrix m = FockMatrix::Zero(size_, size_);
  for (long i = 0; i < size_; ++i) m(i, i) = static_cast<double>(occupation(i, reg));
  return m;
}

FockMatrix FockBasis::diagonal_fn(int reg, const std::function<Complex(int)>& f) const {
  FockMatrix m = FockMatrix::Zero(size_, size_);
  for (long i = 0; i < size_; ++i) m(i, i) = f(occupation(i, reg));
  return m;
}

double safe_block_deviation(const FockBasis& basis, const FockMatrix& lhs, const FockMatrix& rhs,
                            int buffer) {
  const int cap = basis.dim() - buffer;
  if (cap < 0) throw DomainError("safe_block_deviation: buffer larger than dim");
  std::vector<long> safe;
  for (long i = 0; i < basis.size(); ++i) {
    if (basis.total_excitation(i) <= cap) safe.push_back(i);
  }
  double worst = 0.0;
  double scale = 1.0;
  for (long r : safe) {
    for (long c : safe) {
      worst = std::max(worst, std::abs(lhs(r, c) - rhs(r, c)));
      scale = std::max({scale, std::abs(lhs(r, c)), std::abs(rhs(r, c))});
    }
  }
  return worst / scale;
}

FockMatrix commutator(const FockMatrix& a, const FockMatrix& b) {
  return a * b - b * a;
}

FockMatrix matrix_power(const FockMatrix& m, int n) {
  if (n < 0) throw DomainError("matrix_power: negative power");
  FockMatrix result = FockMatrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < n; ++i) result = result * m;
  return result;
}

}  // namespace tjcm
