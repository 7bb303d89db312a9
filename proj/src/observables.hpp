#pragma once

#include <Eigen/Dense>

#include "spin_system.hpp"

namespace sqz {

struct SpinExpectations {
  double jx = 0.0;
  double jy = 0.0;
  double jz = 0.0;
  double norm_of_mean = 0.0;
};

// <J_a> = psi^dag J_a psi for a = x, y, z. An imaginary residue beyond
// tol::imag_residue * J signals a broken operator or state and fails.
SpinExpectations expectations(const Eigen::VectorXcd& psi, const CollectiveOperators& ops);

// Symmetrized covariance C_ab = <(J_a J_b + J_b J_a)/2> - <J_a><J_b>,
// axes ordered x, y, z.
Eigen::Matrix3d covariance(const Eigen::VectorXcd& psi, const CollectiveOperators& ops);

// Orthonormal frame perpendicular to the mean spin together with the 2x2
// covariance block in that frame. When the mean spin is degenerate
// (|<J>| < tol::degenerate_mean * J) no frame is defined; e1, e2 fall back
// to y, z and the flag is set.
struct PerpCovariance {
  Eigen::Vector3d e1 = Eigen::Vector3d::UnitY();
  Eigen::Vector3d e2 = Eigen::Vector3d::UnitZ();
  double c11 = 0.0;
  double c22 = 0.0;
  double c12 = 0.0;
  bool degenerate_mean = false;
};

PerpCovariance perp_covariance(const Eigen::Matrix3d& cov, const SpinExpectations& mean, double j);

struct SqueezingRecord {
  double t = 0.0;
  double xi_s = 0.0;
  double min_perp_variance = 0.0;
  SpinExpectations expectations;
  bool degenerate_mean = false;
  // y/z covariance block, the perpendicular plane of the -x polarized state
  double var_jz = 0.0;
  double var_jy = 0.0;
  double cov_yz = 0.0;
};

// xi_s = sqrt(2 * min_perp_variance / J). min_perp_variance is the smaller
// eigenvalue of the perpendicular 2x2 covariance block, which is exactly the
// minimum of Var(cos(theta) J_e1 + sin(theta) J_e2) over theta. For a
// degenerate mean spin the minimum runs over the full 3x3 covariance instead
// and the record is flagged.
SqueezingRecord squeezing_parameter(const Eigen::VectorXcd& psi, const CollectiveOperators& ops, double t);

}  // namespace sqz
