#pragma once

#include <Eigen/Dense>
#include <complex>
#include <unsupported/Eigen/KroneckerProduct>

#include "hss/errors.hpp"
#include "hss/tolerances.hpp"

namespace hss {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Eigensystem of a Hermitian matrix. Eigenvalues ascending; eigenvectors
/// are the matching orthonormal columns, each phase-normalized so that its
/// first component above 1e-12 in magnitude is real positive.
struct HermEigen {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Validated quantum state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  /// Validates against the strict invariants (tol::kHermiticity,
  /// kUnitTrace, kPositivity). Throws NotAState naming the worst offender.
  static DensityMatrix validated(const ComplexMatrix& m);
  /// Validates hermiticity, trace and positivity against a uniform bound.
  static DensityMatrix validated(const ComplexMatrix& m, double tol);

  const ComplexMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

/// Cyclic-Jacobi eigendecomposition of a Hermitian matrix (dims <= 8).
/// Throws NonHermitianInput when the entrywise asymmetry exceeds
/// tol::kHermReject, ConvergenceFailure after tol::kJacobiMaxSweeps sweeps.
HermEigen herm_eig(const Eigen::Ref<const ComplexMatrix>& H);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const Eigen::Ref<const ComplexMatrix>& M);

/// Tensor product, first-argument index major: entry ((i1,i2),(j1,j2)) of
/// the result is A(i1,j1) * B(i2,j2) at row i1*dimB+i2, column j1*dimB+j2.
template <typename DerivedA, typename DerivedB>
ComplexMatrix kron(const Eigen::MatrixBase<DerivedA>& A,
                   const Eigen::MatrixBase<DerivedB>& B) {
  return Eigen::kroneckerProduct(A, B).eval();
}

/// Checks hermiticity, unit trace and positive semidefiniteness against a
/// uniform tolerance; returns the validated state or throws NotAState with
/// the violated invariant and its magnitude.
DensityMatrix validate_density(const ComplexMatrix& M, double tol);

}  // namespace hss
