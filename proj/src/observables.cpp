#include "observables.hpp"

#include <array>
#include <cmath>
#include <string>

#include "constants.hpp"
#include "errors.hpp"

namespace sqz {

namespace {

// J_a psi for a = x, y, z.
std::array<Eigen::VectorXcd, 3> spin_applications(const Eigen::VectorXcd& psi,
                                                  const CollectiveOperators& ops) {
  return {apply_tridiagonal(ops.jx(), psi), apply_jy(ops, psi), apply_tridiagonal(ops.jz(), psi)};
}

// Mathematically real quantity: discard the imaginary rounding residue after
// checking it is small on the scale of J.
double real_checked(std::complex<double> z, double j, const char* what) {
  require(std::abs(z.imag()) < tol::imag_residue * std::max(j, 1.0), ErrorCode::numerical,
          std::string(what) + " acquired an imaginary residue of " + std::to_string(z.imag()));
  return z.real();
}

SpinExpectations expectations_from(const std::array<Eigen::VectorXcd, 3>& phi,
                                   const Eigen::VectorXcd& psi, double j) {
  SpinExpectations e;
  e.jx = real_checked(psi.dot(phi[0]), j, "<Jx>");
  e.jy = real_checked(psi.dot(phi[1]), j, "<Jy>");
  e.jz = real_checked(psi.dot(phi[2]), j, "<Jz>");
  e.norm_of_mean = std::sqrt(e.jx * e.jx + e.jy * e.jy + e.jz * e.jz);
  return e;
}

Eigen::Matrix3d covariance_from(const std::array<Eigen::VectorXcd, 3>& phi,
                                const SpinExpectations& e, double j) {
  const std::array<double, 3> mean{e.jx, e.jy, e.jz};
  Eigen::Matrix3d c;
  for (int a = 0; a < 3; ++a) {
    // Diagonal entries are real up to rounding; off-diagonal real parts are
    // the symmetrized products.
    c(a, a) = real_checked(phi[a].dot(phi[a]), j * j, "<J_a^2>") - mean[a] * mean[a];
    for (int b = a + 1; b < 3; ++b) {
      c(a, b) = phi[a].dot(phi[b]).real() - mean[a] * mean[b];
      c(b, a) = c(a, b);
    }
  }
  return c;
}

void check_psd(const Eigen::Matrix3d& c, double j) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(c, Eigen::EigenvaluesOnly);
  require(es.eigenvalues()[0] >= -tol::covariance_psd * j * j, ErrorCode::numerical,
          "covariance matrix lost positive semidefiniteness (min eigenvalue " +
              std::to_string(es.eigenvalues()[0]) + ")");
}

double smaller_eigenvalue_2x2(double c11, double c22, double c12) {
  const double half_trace = 0.5 * (c11 + c22);
  const double half_gap = 0.5 * (c11 - c22);
  return half_trace - std::sqrt(half_gap * half_gap + c12 * c12);
}

}  // namespace

SpinExpectations expectations(const Eigen::VectorXcd& psi, const CollectiveOperators& ops) {
  return expectations_from(spin_applications(psi, ops), psi, ops.j.value());
}

Eigen::Matrix3d covariance(const Eigen::VectorXcd& psi, const CollectiveOperators& ops) {
  const double j = ops.j.value();
  const auto phi = spin_applications(psi, ops);
  const Eigen::Matrix3d c = covariance_from(phi, expectations_from(phi, psi, j), j);
  check_psd(c, j);
  return c;
}

PerpCovariance perp_covariance(const Eigen::Matrix3d& cov, const SpinExpectations& mean, double j) {
  PerpCovariance out;
  if (mean.norm_of_mean < tol::degenerate_mean * j) {
    out.degenerate_mean = true;
  } else {
    const Eigen::Vector3d u = Eigen::Vector3d(mean.jx, mean.jy, mean.jz) / mean.norm_of_mean;
    if (std::max(std::abs(u.y()), std::abs(u.z())) < 1e-10) {
      // Mean spin along +-x: pin the frame to y, z for reproducibility.
      out.e1 = Eigen::Vector3d::UnitY();
      out.e2 = Eigen::Vector3d::UnitZ();
    } else {
      // Deterministic Gram-Schmidt seeded with the smallest-component axis.
      int smallest = 0;
      u.cwiseAbs().minCoeff(&smallest);
      Eigen::Vector3d seed = Eigen::Vector3d::Zero();
      seed[smallest] = 1.0;
      out.e1 = (seed - seed.dot(u) * u).normalized();
      out.e2 = u.cross(out.e1);
    }
  }
  out.c11 = out.e1.dot(cov * out.e1);
  out.c22 = out.e2.dot(cov * out.e2);
  out.c12 = out.e1.dot(cov * out.e2);
  return out;
}

SqueezingRecord squeezing_parameter(const Eigen::VectorXcd& psi, const CollectiveOperators& ops, double t) {
  const double j = ops.j.value();
  const auto phi = spin_applications(psi, ops);

  SqueezingRecord rec;
  rec.t = t;
  rec.expectations = expectations_from(phi, psi, j);

  const Eigen::Matrix3d c = covariance_from(phi, rec.expectations, j);
  check_psd(c, j);
  rec.var_jy = c(1, 1);
  rec.var_jz = c(2, 2);
  rec.cov_yz = c(1, 2);

  const PerpCovariance perp = perp_covariance(c, rec.expectations, j);
  rec.degenerate_mean = perp.degenerate_mean;
  if (perp.degenerate_mean) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(c, Eigen::EigenvaluesOnly);
    rec.min_perp_variance = es.eigenvalues()[0];
  } else {
    rec.min_perp_variance = smaller_eigenvalue_2x2(perp.c11, perp.c22, perp.c12);
  }
  rec.xi_s = std::sqrt(2.0 * std::max(rec.min_perp_variance, 0.0) / j);
  return rec;
}

}  // namespace sqz
