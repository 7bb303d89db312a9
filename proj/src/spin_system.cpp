#include "spin_system.hpp"

#include <cmath>
#include <string>

#include "constants.hpp"
#include "errors.hpp"

namespace sqz {

SpinMagnitude::SpinMagnitude(std::int64_t twice_j) : twice_j_(twice_j) {
  require(twice_j >= 1, ErrorCode::invalid_argument,
          "twice_j must be >= 1; a one-dimensional spin space has no squeezing (got " +
              std::to_string(twice_j) + ")");
}

TridiagonalMatrix CollectiveOperators::jx() const {
  return {Eigen::VectorXd::Zero(j.dim()), 0.5 * ladder_super};
}

TridiagonalMatrix CollectiveOperators::jz() const {
  return {jz_diag, Eigen::VectorXd::Zero(j.dim() - 1)};
}

TridiagonalMatrix CollectiveOperators::jz_squared() const {
  return {jz_diag.cwiseProduct(jz_diag), Eigen::VectorXd::Zero(j.dim() - 1)};
}

CollectiveOperators build_operators(SpinMagnitude j) {
  const Eigen::Index n = j.dim();
  const double jj = j.value() * (j.value() + 1.0);

  Eigen::VectorXd jz(n), ladder(n - 1);
  for (Eigen::Index i = 0; i < n; ++i) jz[i] = j.m_at(i);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double m = j.m_at(i);
    ladder[i] = std::sqrt(jj - m * (m + 1.0));
  }
  return {j, std::move(jz), std::move(ladder)};
}

Eigen::VectorXcd apply_jy(const CollectiveOperators& ops, const Eigen::VectorXcd& psi) {
  const Eigen::Index n = ops.j.dim();
  require(psi.size() == n, ErrorCode::dimension_mismatch,
          "state dimension does not match operator dimension");
  const std::complex<double> half_i(0.0, 0.5);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  out.head(n - 1) += half_i * (ops.ladder_super.asDiagonal() * psi.tail(n - 1));
  out.tail(n - 1) -= half_i * (ops.ladder_super.asDiagonal() * psi.head(n - 1));
  return out;
}

Eigen::VectorXcd lowest_jx_eigenstate(const CollectiveOperators& ops) {
  const SpectralDecomposition d = diagonalize(ops.jx());
  const double j = ops.j.value();

  // The Jx spectrum is m = -J..J, so the ground state is separated by a unit
  // gap and needs no degeneracy handling.
  require(d.eigenvalues[1] - d.eigenvalues[0] > 0.5, ErrorCode::numerical,
          "unexpected near-degeneracy at the bottom of the Jx spectrum");

  Eigen::VectorXd ground = d.eigenvectors.col(0);
  if (ground[0] < 0.0) ground = -ground;

  Eigen::VectorXcd psi = ground.cast<std::complex<double>>();
  const double residual = (apply_tridiagonal(ops.jx(), psi) + j * psi).norm();
  require(residual < tol::state_residual * j, ErrorCode::numerical,
          "Jx ground-state residual " + std::to_string(residual) +
              " exceeds tolerance at twice_j=" + std::to_string(ops.j.twice_j()));
  return psi;
}

}  // namespace sqz
