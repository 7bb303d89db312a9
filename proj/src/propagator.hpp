#pragma once

#include "spin_system.hpp"

namespace sqz {

// Couplings of H = 2 kappa Jz^2 + omega Jx. kappa sets the inverse time
// unit; omega is quoted in the same units.
struct HamiltonianParams {
  double kappa = 1.0;
  double omega = 0.0;
};

void validate(const HamiltonianParams& p);

// diag = 2 kappa m^2, super = (omega/2) b_m.
TridiagonalMatrix assemble_hamiltonian(const CollectiveOperators& ops, const HamiltonianParams& p);

// psi(t) = V exp(-i lambda t) V^T psi0, exact for any real t. Norm is
// checked to tol::unitarity on the way out.
Eigen::VectorXcd evolve(const SpectralDecomposition& d, const Eigen::VectorXcd& psi0, double t);

// V^T psi0, computed once and reused across many evaluation times.
Eigen::VectorXcd spectral_coefficients(const SpectralDecomposition& d, const Eigen::VectorXcd& psi0);
Eigen::VectorXcd evolve_coefficients(const SpectralDecomposition& d, const Eigen::VectorXcd& coeffs, double t);

// omega = 0 closed form: c_m(t) = c_m(0) exp(-2 i kappa m^2 t). Shares no
// code with the spectral path, which makes it an independent oracle for it.
Eigen::VectorXcd evolve_diagonal_oracle(const SpinMagnitude& j, double kappa,
                                        const Eigen::VectorXcd& psi0, double t);

}  // namespace sqz
