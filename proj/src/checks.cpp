#include "checks.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "constants.hpp"
#include "errors.hpp"
#include "observables.hpp"
#include "propagator.hpp"
#include "spin_system.hpp"
#include "sweep.hpp"

namespace sqz {

namespace {

using ComplexMatrix = Eigen::MatrixXcd;
constexpr std::complex<double> kI{0.0, 1.0};

std::string spin_label(std::int64_t twice_j) {
  if (twice_j % 2 == 0) return "J=" + std::to_string(twice_j / 2);
  return "J=" + std::to_string(twice_j) + "/2";
}

ComplexMatrix dense_jx(const CollectiveOperators& ops) {
  const Eigen::Index n = ops.j.dim();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = 0.5 * ops.ladder_super[i];
    m(i + 1, i) = 0.5 * ops.ladder_super[i];
  }
  return m;
}

ComplexMatrix dense_jy(const CollectiveOperators& ops) {
  const Eigen::Index n = ops.j.dim();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = 0.5 * kI * ops.ladder_super[i];
    m(i + 1, i) = -0.5 * kI * ops.ladder_super[i];
  }
  return m;
}

ComplexMatrix dense_jz(const CollectiveOperators& ops) {
  return ops.jz_diag.cast<std::complex<double>>().asDiagonal();
}

double fidelity(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return std::norm(a.dot(b));
}

}  // namespace

std::vector<CheckResult> run_checks(const std::vector<std::int64_t>& twice_j_list,
                                    double tolerance_scale) {
  require(std::isfinite(tolerance_scale) && tolerance_scale >= 0.0 && tolerance_scale <= 1.0,
          ErrorCode::invalid_argument, "tolerance_scale must lie in [0, 1]");
  require(!twice_j_list.empty(), ErrorCode::invalid_argument, "check suite needs at least one spin");

  std::vector<CheckResult> results;
  auto record = [&](const std::string& name, double observed, double tolerance) {
    results.push_back({name, observed < tolerance, observed, tolerance});
  };

  for (const std::int64_t twice_j : twice_j_list) {
    const SpinMagnitude j(twice_j);
    const double jv = j.value();
    const CollectiveOperators ops = build_operators(j);
    const std::string label = spin_label(twice_j);

    // Dense realizations give an implementation-independent statement of the
    // su(2) algebra: [Ja, Jb] = i Jc cyclically, plus the Casimir identity.
    {
      const ComplexMatrix jx = dense_jx(ops), jy = dense_jy(ops), jz = dense_jz(ops);
      const ComplexMatrix eye = ComplexMatrix::Identity(j.dim(), j.dim());
      double worst = 0.0;
      worst = std::max(worst, (jx * jy - jy * jx - kI * jz).cwiseAbs().maxCoeff());
      worst = std::max(worst, (jy * jz - jz * jy - kI * jx).cwiseAbs().maxCoeff());
      worst = std::max(worst, (jz * jx - jx * jz - kI * jy).cwiseAbs().maxCoeff());
      record("operator_algebra " + label, worst, 1e-12 * jv * jv * tolerance_scale);
      const double casimir =
          (jx * jx + jy * jy + jz * jz - jv * (jv + 1.0) * eye).cwiseAbs().maxCoeff();
      record("casimir_identity " + label, casimir, 1e-12 * jv * jv * tolerance_scale);
    }

    const Eigen::VectorXcd psi0 = lowest_jx_eigenstate(ops);

    record("initial_state_residual " + label, (apply_tridiagonal(ops.jx(), psi0) + jv * psi0).norm(),
           tol::state_residual * jv * tolerance_scale);

    {
      const Eigen::Matrix3d c = covariance(psi0, ops);
      const double var_err =
          std::max(std::abs(c(1, 1) - 0.5 * jv), std::abs(c(2, 2) - 0.5 * jv));
      record("initial_state_variances " + label, var_err, 1e-8 * tolerance_scale);
      const SqueezingRecord rec = squeezing_parameter(psi0, ops, 0.0);
      record("coherent_state_xi " + label, std::abs(rec.xi_s - 1.0), 1e-8 * tolerance_scale);
    }

    // Unitarity and energy conservation along a driven trajectory.
    {
      const Model m = make_model(twice_j, 1.0, 25.0);
      const TridiagonalMatrix h = assemble_hamiltonian(m.ops, m.params);
      const double e0 = m.psi0.dot(apply_tridiagonal(h, m.psi0)).real();
      double worst_norm = 0.0, worst_energy = 0.0;
      for (const double t : {0.01, 0.1, 1.0, 10.0}) {
        const Eigen::VectorXcd psi = evolve_coefficients(m.decomposition, m.coefficients, t);
        worst_norm = std::max(worst_norm, std::abs(psi.norm() - 1.0));
        const double e = psi.dot(apply_tridiagonal(h, psi)).real();
        worst_energy = std::max(worst_energy, std::abs(e - e0) / std::abs(e0));
      }
      record("unitarity " + label, worst_norm, tol::unitarity * tolerance_scale);
      record("energy_conservation " + label, worst_energy, 1e-8 * tolerance_scale);
    }

    // Spectral evolution against the diagonal-phase closed form at omega = 0.
    {
      const Model m = make_model(twice_j, 1.0, 0.0);
      double worst = 0.0;
      for (const double t : {0.01, 0.1, 1.0}) {
        const Eigen::VectorXcd a = evolve_coefficients(m.decomposition, m.coefficients, t);
        const Eigen::VectorXcd b = evolve_diagonal_oracle(j, 1.0, m.psi0, t);
        worst = std::max(worst, 1.0 - fidelity(a, b));
      }
      record("oracle_equivalence " + label, worst, 1e-10 * tolerance_scale);
    }
  }
  return results;
}

}  // namespace sqz
