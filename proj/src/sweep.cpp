#include "sweep.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "constants.hpp"
#include "errors.hpp"
#include "frozen_spin.hpp"
#include "parallel.hpp"

namespace sqz {

namespace {

constexpr double kInvGolden = 0.6180339887498949;

// Tracks the best (x, f) seen. Improvements below the tie threshold do not
// displace the incumbent, so flat landscapes keep the earliest point.
struct Incumbent {
  double x = 0.0;
  double f = 0.0;

  bool consider(double cx, double cf) {
    if (cf < f - tol::minimizer_tie) {
      x = cx;
      f = cf;
      return true;
    }
    return false;
  }
};

// Golden-section descent on [a, b]; every evaluation is offered to best.
template <typename F>
void golden_refine(F&& f, double a, double b, double x_tol, Incumbent& best) {
  double x1 = b - kInvGolden * (b - a);
  double x2 = a + kInvGolden * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  best.consider(x1, f1);
  best.consider(x2, f2);
  for (int iter = 0; iter < 200 && (b - a) > x_tol; ++iter) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvGolden * (b - a);
      f1 = f(x1);
      best.consider(x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvGolden * (b - a);
      f2 = f(x2);
      best.consider(x2, f2);
    }
  }
}

}  // namespace

Model make_model(std::int64_t twice_j, double kappa, double omega) {
  const SpinMagnitude j(twice_j);
  const HamiltonianParams params{kappa, omega};
  validate(params);

  CollectiveOperators ops = build_operators(j);
  SpectralDecomposition decomposition;
  try {
    decomposition = diagonalize(assemble_hamiltonian(ops, params));
  } catch (const Error& e) {
    throw Error(e.code(), std::string(e.what()) + " [twice_j=" + std::to_string(twice_j) +
                              ", kappa=" + std::to_string(kappa) +
                              ", omega=" + std::to_string(omega) + "]");
  }
  Eigen::VectorXcd psi0 = lowest_jx_eigenstate(ops);
  Eigen::VectorXcd coefficients = spectral_coefficients(decomposition, psi0);
  return {j, params, std::move(ops), std::move(decomposition), std::move(psi0),
          std::move(coefficients)};
}

SqueezingRecord record_at(const Model& m, double t) {
  return squeezing_parameter(evolve_coefficients(m.decomposition, m.coefficients, t), m.ops, t);
}

double default_horizon(double kappa, double omega, double j) {
  require(std::isfinite(kappa) && kappa > 0.0, ErrorCode::invalid_argument,
          "default horizon needs kappa > 0; pass t_max explicitly otherwise");
  require(std::isfinite(omega) && omega >= 0.0, ErrorCode::invalid_argument,
          "omega must be finite and >= 0");
  require(std::isfinite(j) && j > 0.0, ErrorCode::invalid_argument, "j must be positive");
  const double twist_scale = 3.0 / (kappa * std::sqrt(j));
  if (omega <= 0.0) return twist_scale;
  return std::max(2.0 * std::numbers::pi / frozen::frequency(kappa, omega, j), twist_scale);
}

double effective_t_max(const TimeGridSpec& grid, double kappa, double omega, double j) {
  if (grid.t_max > 0.0) {
    require(std::isfinite(grid.t_max), ErrorCode::invalid_argument, "t_max must be finite");
    return grid.t_max;
  }
  return default_horizon(kappa, omega, j);
}

int effective_samples(const TimeGridSpec& grid, double t_max, double kappa, double omega, double j) {
  int n = std::max(grid.n_coarse, 16);
  if (omega > 0.0) {
    // Keep the spacing at or below a quarter of the half-period pi / freq.
    const double max_dt = std::numbers::pi / (4.0 * frozen::frequency(kappa, omega, j));
    const double needed = std::ceil(t_max / max_dt);
    require(needed < 1e7, ErrorCode::invalid_argument,
            "time grid would need more than 1e7 samples; shorten t_max");
    if (needed > n) n = static_cast<int>(needed);
  }
  return n;
}

std::vector<SqueezingRecord> timeseries(const Model& m, const TimeGridSpec& grid, int n_threads) {
  const double t_max = effective_t_max(grid, m.params.kappa, m.params.omega, m.j.value());
  const int n = effective_samples(grid, t_max, m.params.kappa, m.params.omega, m.j.value());
  const double step = t_max / n;

  std::vector<SqueezingRecord> records(static_cast<std::size_t>(n) + 1);
  parallel_for(n + 1, n_threads,
               [&](std::int64_t i) { records[static_cast<std::size_t>(i)] = record_at(m, step * i); });
  return records;
}

TimeMinimum min_over_time(const Model& m, const TimeGridSpec& grid, int n_threads) {
  const std::vector<SqueezingRecord> coarse = timeseries(m, grid, n_threads);
  const std::size_t n = coarse.size() - 1;

  Incumbent best{coarse[0].t, coarse[0].xi_s};
  std::size_t best_index = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (best.consider(coarse[i].t, coarse[i].xi_s)) best_index = i;
  }

  TimeMinimum out;
  out.at_boundary = (best_index == n);

  // kappa = 0 evolves the stationary state: the landscape is flat and there
  // is nothing to refine.
  if (grid.refine && !out.at_boundary && m.params.kappa > 0.0 && n >= 1) {
    const double lo = coarse[best_index > 0 ? best_index - 1 : 0].t;
    const double hi = coarse[best_index + 1].t;
    golden_refine([&](double t) { return record_at(m, t).xi_s; }, lo, hi,
                  tol::time_refine_bracket / m.params.kappa, best);
  }

  out.t_star = best.x;
  out.xi_min = best.f;
  return out;
}

bool first_varjz_minimum(const Model& m, const TimeGridSpec& grid, int n_threads, double* t_first) {
  require(t_first != nullptr, ErrorCode::invalid_argument, "t_first must not be null");
  const std::vector<SqueezingRecord> coarse = timeseries(m, grid, n_threads);
  const std::size_t n = coarse.size() - 1;

  // Dips below the rounding floor of the J^2-sized moments are not minima.
  const double jv = m.j.value();
  const double noise = tol::minimizer_tie * std::max(1.0, jv * jv);
  for (std::size_t i = 1; i < n; ++i) {
    if (coarse[i].var_jz < coarse[i - 1].var_jz - noise &&
        coarse[i].var_jz <= coarse[i + 1].var_jz) {
      Incumbent best{coarse[i].t, coarse[i].var_jz};
      if (m.params.kappa > 0.0) {
        golden_refine([&](double t) { return record_at(m, t).var_jz; }, coarse[i - 1].t,
                      coarse[i + 1].t, tol::time_refine_bracket / m.params.kappa, best);
      }
      *t_first = best.x;
      return true;
    }
  }
  return false;
}

SweepResult optimal_omega(std::int64_t twice_j, double kappa, double omega_lo, double omega_hi,
                          const TimeGridSpec& grid, int n_omega, int n_threads) {
  require(std::isfinite(omega_lo) && std::isfinite(omega_hi) && omega_lo > 0.0 && omega_lo < omega_hi,
          ErrorCode::invalid_argument, "omega range must satisfy 0 < lo < hi");
  const int n = std::max(n_omega, 17);

  SweepResult result;
  result.twice_j = twice_j;

  // Coarse logarithmic grid, evaluated in parallel; one decomposition per
  // omega, so the inner time scans stay serial.
  const double log_lo = std::log(omega_lo);
  const double log_ratio = std::log(omega_hi / omega_lo);
  std::vector<SweepPoint> coarse(static_cast<std::size_t>(n));
  parallel_for(n, n_threads, [&](std::int64_t k) {
    const double omega =
        (k == n - 1) ? omega_hi : std::exp(log_lo + log_ratio * static_cast<double>(k) / (n - 1));
    const Model model = make_model(twice_j, kappa, omega);
    const TimeMinimum tm = min_over_time(model, grid, 1);
    coarse[static_cast<std::size_t>(k)] = {omega, tm.xi_min, tm.t_star};
  });
  result.trace = coarse;

  std::size_t best_k = 0;
  for (std::size_t k = 1; k < coarse.size(); ++k) {
    if (coarse[k].xi_min < coarse[best_k].xi_min - tol::minimizer_tie) best_k = k;
  }
  result.at_boundary = (best_k == 0 || best_k + 1 == coarse.size());

  // Golden-section refinement in log omega around the best grid point. Each
  // evaluation lands in the trace; the inner scans may now use the threads.
  const double bracket_lo = std::log(coarse[best_k > 0 ? best_k - 1 : 0].omega);
  const double bracket_hi =
      std::log(coarse[std::min(best_k + 1, coarse.size() - 1)].omega);
  Incumbent best{std::log(coarse[best_k].omega), coarse[best_k].xi_min};
  if (bracket_hi > bracket_lo) {
    auto eval = [&](double log_omega) {
      const double omega = std::exp(log_omega);
      const Model model = make_model(twice_j, kappa, omega);
      const TimeMinimum tm = min_over_time(model, grid, n_threads);
      result.trace.push_back({omega, tm.xi_min, tm.t_star});
      return tm.xi_min;
    };
    golden_refine(eval, bracket_lo, bracket_hi, std::log1p(tol::omega_refine_rel), best);
  }

  // Final selection over the whole trace; near-equal minima go to the
  // smaller omega.
  const SweepPoint* chosen = &result.trace.front();
  for (const SweepPoint& p : result.trace) {
    if (p.xi_min < chosen->xi_min - tol::minimizer_tie ||
        (p.xi_min < chosen->xi_min + tol::minimizer_tie && p.omega < chosen->omega)) {
      chosen = &p;
    }
  }
  result.omega_opt = chosen->omega;
  result.xi_min = chosen->xi_min;
  result.t_star = chosen->t_star;
  return result;
}

}  // namespace sqz
