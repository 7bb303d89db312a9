#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>

#include "tridiagonal.hpp"

namespace sqz {

// Spin magnitude J, stored as 2J so half-integer spins stay exact.
class SpinMagnitude {
 public:
  explicit SpinMagnitude(std::int64_t twice_j);

  std::int64_t twice_j() const { return twice_j_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(twice_j_) + 1; }
  double value() const { return 0.5 * static_cast<double>(twice_j_); }

  // Basis convention: index i <-> magnetic quantum number m = i - J,
  // ascending from m = -J at i = 0 to m = +J at i = dim-1.
  double m_at(Eigen::Index i) const { return static_cast<double>(i) - value(); }

 private:
  std::int64_t twice_j_;
};

// Jz diagonal and the ladder superdiagonal b_m = sqrt(J(J+1) - m(m+1))
// determine Jx, Jy and Jz^2 in the Jz eigenbasis.
struct CollectiveOperators {
  SpinMagnitude j;
  Eigen::VectorXd jz_diag;       // entries m
  Eigen::VectorXd ladder_super;  // b_m, coupling m -> m+1

  TridiagonalMatrix jx() const;          // off-diagonal b_m / 2
  TridiagonalMatrix jz() const;          // diagonal m
  TridiagonalMatrix jz_squared() const;  // diagonal m^2
};

CollectiveOperators build_operators(SpinMagnitude j);

// (Jy psi)_k = (i/2) (b_k psi_{k+1} - b_{k-1} psi_{k-1})
Eigen::VectorXcd apply_jy(const CollectiveOperators& ops, const Eigen::VectorXcd& psi);

// Lowest eigenvector of Jx, i.e. the coherent state polarized along -x.
// The global phase is fixed by making the m = -J amplitude real positive,
// so repeated runs give bit-identical amplitudes. Enforced postcondition:
// ||Jx psi + J psi|| < tol::state_residual * J.
Eigen::VectorXcd lowest_jx_eigenstate(const CollectiveOperators& ops);

}  // namespace sqz
