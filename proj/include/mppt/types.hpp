// SPDX-License-Identifier: Apache-2.0

#ifndef MPPT_TYPES_HPP
#define MPPT_TYPES_HPP

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "mppt/errors.hpp"

namespace mppt {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// (A + A†)/2. Exact identity when A is already Hermitian entrywise.
inline Matrix hermitianPart(const Matrix& A) { return (A + A.adjoint()) / 2.0; }

/// Dense square complex matrix checked Hermitian at construction and stored
/// with exact entrywise symmetry.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix entries) {
    if (entries.rows() != entries.cols())
      throw DimensionMismatch("HermitianOperator: matrix must be square");
    const double scale = entries.cwiseAbs().maxCoeff();
    const double asym = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale)
      throw NotHermitian("HermitianOperator: asymmetry " + std::to_string(asym));
    entries_ = hermitianPart(entries);
  }

  static HermitianOperator Diagonal(const RealVector& d) {
    return HermitianOperator(Matrix(d.cast<Complex>().asDiagonal()));
  }
  static HermitianOperator Zero(Index dim) { return HermitianOperator(Matrix::Zero(dim, dim)); }
  static HermitianOperator Identity(Index dim) {
    return HermitianOperator(Matrix::Identity(dim, dim));
  }

  Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }

 private:
  Matrix entries_;
};

// Real linear combinations of Hermitian matrices stay exactly Hermitian,
// so these bypass the constructor check.
inline HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(Matrix(a.matrix() + b.matrix()));
}
inline HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(Matrix(a.matrix() - b.matrix()));
}
inline HermitianOperator operator*(double c, const HermitianOperator& a) {
  return HermitianOperator(Matrix(c * a.matrix()));
}

}  // namespace mppt

#endif  // MPPT_TYPES_HPP
