#include "tridiagonal.hpp"

#include <lapacke.h>

#include <string>
#include <vector>

#include "constants.hpp"
#include "errors.hpp"

namespace sqz {

namespace {

void check_shape(const TridiagonalMatrix& op) {
  require(op.dim() >= 1, ErrorCode::invalid_argument, "tridiagonal matrix must have dimension >= 1");
  require(op.super.size() == op.dim() - 1, ErrorCode::dimension_mismatch,
          "tridiagonal superdiagonal must have dim-1 entries");
}

template <typename Vec>
Vec apply_impl(const TridiagonalMatrix& op, const Vec& psi) {
  const Eigen::Index n = op.dim();
  Vec out = op.diag.asDiagonal() * psi;
  if (n > 1) {
    out.head(n - 1) += op.super.asDiagonal() * psi.tail(n - 1);
    out.tail(n - 1) += op.super.asDiagonal() * psi.head(n - 1);
  }
  return out;
}

}  // namespace

Eigen::VectorXcd apply_tridiagonal(const TridiagonalMatrix& op, const Eigen::VectorXcd& psi) {
  check_shape(op);
  require(psi.size() == op.dim(), ErrorCode::dimension_mismatch,
          "state dimension does not match operator dimension");
  return apply_impl(op, psi);
}

Eigen::VectorXd apply_tridiagonal(const TridiagonalMatrix& op, const Eigen::VectorXd& psi) {
  check_shape(op);
  require(psi.size() == op.dim(), ErrorCode::dimension_mismatch,
          "state dimension does not match operator dimension");
  return apply_impl(op, psi);
}

SpectralDecomposition diagonalize(const TridiagonalMatrix& h) {
  check_shape(h);
  const Eigen::Index n = h.dim();

  SpectralDecomposition d;
  d.eigenvalues = h.diag;
  d.eigenvectors.resize(n, n);
  if (n == 1) {
    d.eigenvectors(0, 0) = 1.0;
    return d;
  }

  // dstevd overwrites its inputs; the off-diagonal is scratch.
  Eigen::VectorXd off = h.super;
  const lapack_int info = LAPACKE_dstevd(
      LAPACK_COL_MAJOR, 'V', static_cast<lapack_int>(n), d.eigenvalues.data(),
      off.data(), d.eigenvectors.data(), static_cast<lapack_int>(n));
  require(info == 0, ErrorCode::numerical,
          "symmetric tridiagonal eigensolver failed to converge (dim=" +
              std::to_string(n) + ", info=" + std::to_string(info) + ")");

  // Factorization residual, O(dim^2): H V computed from the tridiagonal bands.
  Eigen::MatrixXd hv = h.diag.asDiagonal() * d.eigenvectors;
  hv.topRows(n - 1) += h.super.asDiagonal() * d.eigenvectors.bottomRows(n - 1);
  hv.bottomRows(n - 1) += h.super.asDiagonal() * d.eigenvectors.topRows(n - 1);
  hv -= d.eigenvectors * d.eigenvalues.asDiagonal();
  const double lambda_scale = std::max(d.eigenvalues.cwiseAbs().maxCoeff(), 1.0);
  const double residual = hv.cwiseAbs().maxCoeff();
  require(residual < tol::eigen_residual * lambda_scale, ErrorCode::numerical,
          "eigendecomposition residual " + std::to_string(residual) +
              " exceeds tolerance (dim=" + std::to_string(n) + ")");

  // Orthonormality on a spread of sampled columns; the full dim^2 check lives
  // in the test suites.
  const Eigen::Index n_sample = std::min<Eigen::Index>(n, 16);
  for (Eigen::Index a = 0; a < n_sample; ++a) {
    const Eigen::Index ca = a * (n - 1) / std::max<Eigen::Index>(n_sample - 1, 1);
    for (Eigen::Index b = a; b < n_sample; ++b) {
      const Eigen::Index cb = b * (n - 1) / std::max<Eigen::Index>(n_sample - 1, 1);
      const double dot = d.eigenvectors.col(ca).dot(d.eigenvectors.col(cb));
      const double expected = (ca == cb) ? 1.0 : 0.0;
      require(std::abs(dot - expected) < tol::eigen_orthonormality, ErrorCode::numerical,
              "eigenvector columns lost orthonormality (dim=" + std::to_string(n) + ")");
    }
  }
  return d;
}

}  // namespace sqz
