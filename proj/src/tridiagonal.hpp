#pragma once

#include <Eigen/Core>
#include <complex>

namespace sqz {

// Real symmetric tridiagonal matrix: main diagonal plus one superdiagonal.
struct TridiagonalMatrix {
  Eigen::VectorXd diag;
  Eigen::VectorXd super;  // size dim-1

  Eigen::Index dim() const { return diag.size(); }
};

// Exact tridiagonal matrix-vector product, linear in dim.
Eigen::VectorXcd apply_tridiagonal(const TridiagonalMatrix& op, const Eigen::VectorXcd& psi);
Eigen::VectorXd apply_tridiagonal(const TridiagonalMatrix& op, const Eigen::VectorXd& psi);

// Eigenvalues ascending, eigenvectors as matching orthonormal columns.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;

  Eigen::Index dim() const { return eigenvalues.size(); }
};

// Full eigendecomposition of a symmetric tridiagonal matrix. The result is
// verified before returning: factorization residual below
// tol::eigen_residual * max|lambda| and sampled-column orthonormality below
// tol::eigen_orthonormality. Throws ErrorCode::numerical otherwise.
SpectralDecomposition diagonalize(const TridiagonalMatrix& h);

}  // namespace sqz
