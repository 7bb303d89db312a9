#pragma once

#include <cstdint>
#include <vector>

#include "observables.hpp"
#include "propagator.hpp"

namespace sqz {

// One (J, kappa, omega) problem: operators, the spectral form of H, the
// coherent initial state and its spectral coefficients. Immutable after
// construction and shared read-only across parallel time queries.
struct Model {
  SpinMagnitude j;
  HamiltonianParams params;
  CollectiveOperators ops;
  SpectralDecomposition decomposition;
  Eigen::VectorXcd psi0;
  Eigen::VectorXcd coefficients;
};

Model make_model(std::int64_t twice_j, double kappa, double omega);

// Squeezing record of the evolved initial state at time t.
SqueezingRecord record_at(const Model& m, double t);

// max(2 pi / freq, 3 / (kappa sqrt(J))); the first term drops out at
// omega = 0. Covers one oscillation period and the twisting time scale.
double default_horizon(double kappa, double omega, double j);

struct TimeGridSpec {
  double t_max = 0.0;  // <= 0 selects default_horizon
  int n_coarse = 512;
  bool refine = true;
};

// Horizon and uniform sample count actually used: n_coarse is raised to at
// least 16 and to whatever keeps the spacing at or below pi / (4 freq).
double effective_t_max(const TimeGridSpec& grid, double kappa, double omega, double j);
int effective_samples(const TimeGridSpec& grid, double t_max, double kappa, double omega, double j);

// One record per grid time 0, dt, ..., t_max, strictly increasing.
std::vector<SqueezingRecord> timeseries(const Model& m, const TimeGridSpec& grid, int n_threads);

struct TimeMinimum {
  double t_star = 0.0;
  double xi_min = 0.0;
  bool at_boundary = false;  // minimum sat at t_max: horizon too short
};

// Global minimum of xi_s over [0, t_max]: coarse scan, then golden-section
// refinement with exact re-evaluations until the bracket is below
// tol::time_refine_bracket / kappa. Ties break toward smaller t.
TimeMinimum min_over_time(const Model& m, const TimeGridSpec& grid, int n_threads);

// First interior local minimum of Var(Jz)(t), refined the same way. Returns
// false when the horizon contains none (e.g. kappa = 0).
bool first_varjz_minimum(const Model& m, const TimeGridSpec& grid, int n_threads, double* t_first);

struct SweepPoint {
  double omega = 0.0;
  double xi_min = 0.0;
  double t_star = 0.0;
};

struct SweepResult {
  std::int64_t twice_j = 0;
  double omega_opt = 0.0;
  double t_star = 0.0;
  double xi_min = 0.0;
  bool at_boundary = false;  // optimum at the edge of [omega_lo, omega_hi]
  std::vector<SweepPoint> trace;
};

// min_over_time on a logarithmic omega grid of n_omega (>= 17) points, then
// golden-section refinement in log omega to relative precision
// tol::omega_refine_rel. Every evaluation lands in the trace; ties break
// toward smaller omega.
SweepResult optimal_omega(std::int64_t twice_j, double kappa, double omega_lo, double omega_hi,
                          const TimeGridSpec& grid, int n_omega, int n_threads);

}  // namespace sqz
