#include "propagator.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "constants.hpp"
#include "errors.hpp"

namespace sqz {

void validate(const HamiltonianParams& p) {
  require(std::isfinite(p.kappa) && p.kappa >= 0.0, ErrorCode::invalid_argument,
          "kappa must be finite and >= 0");
  require(std::isfinite(p.omega) && p.omega >= 0.0, ErrorCode::invalid_argument,
          "omega must be finite and >= 0");
}

TridiagonalMatrix assemble_hamiltonian(const CollectiveOperators& ops, const HamiltonianParams& p) {
  validate(p);
  return {2.0 * p.kappa * ops.jz_diag.cwiseProduct(ops.jz_diag),
          0.5 * p.omega * ops.ladder_super};
}

Eigen::VectorXcd spectral_coefficients(const SpectralDecomposition& d, const Eigen::VectorXcd& psi0) {
  require(psi0.size() == d.dim(), ErrorCode::dimension_mismatch,
          "state dimension does not match decomposition dimension");
  Eigen::VectorXcd coeffs(d.dim());
  coeffs.real() = d.eigenvectors.transpose() * psi0.real();
  coeffs.imag() = d.eigenvectors.transpose() * psi0.imag();
  return coeffs;
}

Eigen::VectorXcd evolve_coefficients(const SpectralDecomposition& d, const Eigen::VectorXcd& coeffs, double t) {
  require(coeffs.size() == d.dim(), ErrorCode::dimension_mismatch,
          "coefficient dimension does not match decomposition dimension");
  require(std::isfinite(t), ErrorCode::invalid_argument, "evolution time must be finite");

  const Eigen::Index n = d.dim();
  Eigen::VectorXcd rotated(n);
  for (Eigen::Index k = 0; k < n; ++k)
    rotated[k] = std::polar(1.0, -d.eigenvalues[k] * t) * coeffs[k];

  Eigen::VectorXcd psi(n);
  psi.real() = d.eigenvectors * rotated.real();
  psi.imag() = d.eigenvectors * rotated.imag();

  const double norm_drift = std::abs(psi.norm() - coeffs.norm());
  require(norm_drift < tol::unitarity, ErrorCode::numerical,
          "evolution lost unitarity by " + std::to_string(norm_drift));
  return psi;
}

Eigen::VectorXcd evolve(const SpectralDecomposition& d, const Eigen::VectorXcd& psi0, double t) {
  return evolve_coefficients(d, spectral_coefficients(d, psi0), t);
}

Eigen::VectorXcd evolve_diagonal_oracle(const SpinMagnitude& j, double kappa,
                                        const Eigen::VectorXcd& psi0, double t) {
  require(psi0.size() == j.dim(), ErrorCode::dimension_mismatch,
          "state dimension does not match spin dimension");
  require(std::isfinite(kappa) && std::isfinite(t), ErrorCode::invalid_argument,
          "kappa and t must be finite");
  Eigen::VectorXcd psi(j.dim());
  for (Eigen::Index i = 0; i < j.dim(); ++i) {
    const double m = j.m_at(i);
    psi[i] = std::polar(1.0, -2.0 * kappa * m * m * t) * psi0[i];
  }
  return psi;
}

}  // namespace sqz
