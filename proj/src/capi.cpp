#include "spinsqueeze.h"

#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "checks.hpp"
#include "constants.hpp"
#include "errors.hpp"
#include "frozen_spin.hpp"
#include "parallel.hpp"
#include "sweep.hpp"

struct sqz_model {
  sqz::Model impl;
};

namespace {

thread_local std::string g_last_error;

sqz_status map_code(sqz::ErrorCode code) {
  switch (code) {
    case sqz::ErrorCode::invalid_argument:
      return SQZ_ERROR_INVALID_ARGUMENT;
    case sqz::ErrorCode::dimension_mismatch:
      return SQZ_ERROR_DIMENSION_MISMATCH;
    case sqz::ErrorCode::domain:
      return SQZ_ERROR_DOMAIN;
    case sqz::ErrorCode::numerical:
      return SQZ_ERROR_NUMERICAL;
  }
  return SQZ_ERROR_INTERNAL;
}

template <typename F>
sqz_status guarded(F&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return SQZ_OK;
  } catch (const sqz::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SQZ_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SQZ_ERROR_INTERNAL;
  }
}

void require_arg(bool ok, const char* message) {
  sqz::require(ok, sqz::ErrorCode::invalid_argument, message);
}

sqz_record to_c(const sqz::SqueezingRecord& r) {
  sqz_record out;
  out.t = r.t;
  out.xi_s = r.xi_s;
  out.jx_mean = r.expectations.jx;
  out.jy_mean = r.expectations.jy;
  out.jz_mean = r.expectations.jz;
  out.var_jz = r.var_jz;
  out.var_jy = r.var_jy;
  out.cov_yz = r.cov_yz;
  out.min_perp_variance = r.min_perp_variance;
  out.degenerate_mean = r.degenerate_mean ? 1 : 0;
  return out;
}

sqz::TimeGridSpec to_grid(const sqz_time_grid* grid) {
  if (grid == nullptr) return {};
  return {grid->t_max, grid->n_coarse, grid->refine != 0};
}

}  // namespace

extern "C" {

const char* sqz_version(void) { return sqz::kVersion; }

const char* sqz_status_name(sqz_status status) {
  switch (status) {
    case SQZ_OK:
      return "ok";
    case SQZ_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case SQZ_ERROR_DIMENSION_MISMATCH:
      return "dimension mismatch";
    case SQZ_ERROR_DOMAIN:
      return "domain error";
    case SQZ_ERROR_NUMERICAL:
      return "numerical failure";
    case SQZ_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* sqz_last_error(void) { return g_last_error.c_str(); }

void sqz_get_tolerances(sqz_tolerances* out) {
  if (out == nullptr) return;
  out->unitarity = sqz::tol::unitarity;
  out->eigen_residual = sqz::tol::eigen_residual;
  out->eigen_orthonormality = sqz::tol::eigen_orthonormality;
  out->state_residual = sqz::tol::state_residual;
  out->imag_residue = sqz::tol::imag_residue;
  out->covariance_psd = sqz::tol::covariance_psd;
  out->degenerate_mean = sqz::tol::degenerate_mean;
  out->time_refine_bracket = sqz::tol::time_refine_bracket;
  out->omega_refine_rel = sqz::tol::omega_refine_rel;
}

sqz_status sqz_model_create(int64_t twice_j, double kappa, double omega, sqz_model** out) {
  return guarded([&] {
    require_arg(out != nullptr, "out must not be null");
    auto handle = std::make_unique<sqz_model>(sqz_model{sqz::make_model(twice_j, kappa, omega)});
    *out = handle.release();
  });
}

void sqz_model_destroy(sqz_model* model) { delete model; }

int64_t sqz_model_dim(const sqz_model* model) {
  return model == nullptr ? 0 : static_cast<int64_t>(model->impl.j.dim());
}

sqz_status sqz_model_evaluate(const sqz_model* model, double t, sqz_record* out) {
  return guarded([&] {
    require_arg(model != nullptr, "model must not be null");
    require_arg(out != nullptr, "out must not be null");
    *out = to_c(sqz::record_at(model->impl, t));
  });
}

sqz_status sqz_model_evaluate_many(const sqz_model* model, const double* times, size_t n,
                                   int n_threads, sqz_record* out) {
  return guarded([&] {
    require_arg(model != nullptr, "model must not be null");
    require_arg(times != nullptr || n == 0, "times must not be null");
    require_arg(out != nullptr || n == 0, "out must not be null");
    sqz::parallel_for(static_cast<std::int64_t>(n), n_threads, [&](std::int64_t i) {
      out[i] = to_c(sqz::record_at(model->impl, times[i]));
    });
  });
}

double sqz_default_horizon(double kappa, double omega, double j) {
  try {
    return sqz::default_horizon(kappa, omega, j);
  } catch (...) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

sqz_status sqz_min_over_time(const sqz_model* model, const sqz_time_grid* grid, int n_threads,
                             sqz_minimum* out) {
  return guarded([&] {
    require_arg(model != nullptr, "model must not be null");
    require_arg(out != nullptr, "out must not be null");
    const sqz::TimeMinimum tm = sqz::min_over_time(model->impl, to_grid(grid), n_threads);
    out->t_star = tm.t_star;
    out->xi_min = tm.xi_min;
    out->at_boundary = tm.at_boundary ? 1 : 0;
  });
}

sqz_status sqz_first_varjz_minimum(const sqz_model* model, const sqz_time_grid* grid,
                                   int n_threads, double* t_first, int* found) {
  return guarded([&] {
    require_arg(model != nullptr, "model must not be null");
    require_arg(t_first != nullptr && found != nullptr, "outputs must not be null");
    double t = 0.0;
    *found = sqz::first_varjz_minimum(model->impl, to_grid(grid), n_threads, &t) ? 1 : 0;
    if (*found) *t_first = t;
  });
}

sqz_status sqz_optimal_omega(int64_t twice_j, double kappa, double omega_lo, double omega_hi,
                             const sqz_time_grid* grid, int n_omega, int n_threads,
                             sqz_sweep_result* out, sqz_sweep_point** trace_out,
                             size_t* trace_len) {
  return guarded([&] {
    require_arg(out != nullptr, "out must not be null");
    require_arg((trace_out == nullptr) == (trace_len == nullptr),
                "trace_out and trace_len must be passed together");
    const sqz::SweepResult r =
        sqz::optimal_omega(twice_j, kappa, omega_lo, omega_hi, to_grid(grid), n_omega, n_threads);
    out->twice_j = r.twice_j;
    out->omega_opt = r.omega_opt;
    out->t_star = r.t_star;
    out->xi_min = r.xi_min;
    out->at_boundary = r.at_boundary ? 1 : 0;
    if (trace_out != nullptr) {
      auto* trace = new sqz_sweep_point[r.trace.size()];
      for (std::size_t i = 0; i < r.trace.size(); ++i)
        trace[i] = {r.trace[i].omega, r.trace[i].xi_min, r.trace[i].t_star};
      *trace_out = trace;
      *trace_len = r.trace.size();
    }
  });
}

void sqz_free_sweep_trace(sqz_sweep_point* trace) { delete[] trace; }

double sqz_frozen_frequency(double kappa, double omega, double j) {
  try {
    return sqz::frozen::frequency(kappa, omega, j);
  } catch (...) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

sqz_status sqz_frozen_variances(double kappa, double omega, double j, double t, double* var_jz,
                                double* var_jy) {
  return guarded([&] {
    require_arg(var_jz != nullptr && var_jy != nullptr, "outputs must not be null");
    const sqz::frozen::FrozenVariances v =
        sqz::frozen::predicted_variances(sqz::frozen::FrozenSpinModel(kappa, omega, j), t);
    *var_jz = v.var_jz;
    *var_jy = v.var_jy;
  });
}

sqz_status sqz_frozen_xi_min(double kappa, double omega, double j, double* out) {
  return guarded([&] {
    require_arg(out != nullptr, "out must not be null");
    *out = sqz::frozen::predicted_xi_min(sqz::frozen::FrozenSpinModel(kappa, omega, j));
  });
}

sqz_status sqz_frozen_optimal_time(double kappa, double omega, double j, int n, double* out) {
  return guarded([&] {
    require_arg(out != nullptr, "out must not be null");
    *out = sqz::frozen::optimal_time(sqz::frozen::FrozenSpinModel(kappa, omega, j), n);
  });
}

sqz_status sqz_frozen_asymptotic_xi(double kappa, double omega, double j, double* out) {
  return guarded([&] {
    require_arg(out != nullptr, "out must not be null");
    *out = sqz::frozen::asymptotic_xi(kappa, omega, j);
  });
}

sqz_status sqz_run_checks(const int64_t* twice_j_list, size_t n_spins, double tolerance_scale,
                          sqz_check_callback callback, void* user, int* all_passed) {
  return guarded([&] {
    require_arg(twice_j_list != nullptr && n_spins > 0, "twice_j_list must not be empty");
    require_arg(all_passed != nullptr, "all_passed must not be null");
    const std::vector<std::int64_t> spins(twice_j_list, twice_j_list + n_spins);
    const std::vector<sqz::CheckResult> results = sqz::run_checks(spins, tolerance_scale);
    int ok = 1;
    for (const sqz::CheckResult& r : results) {
      if (!r.passed) ok = 0;
      if (callback != nullptr) {
        const sqz_check_item item{r.name.c_str(), r.passed ? 1 : 0, r.observed, r.tolerance};
        callback(&item, user);
      }
    }
    *all_passed = ok;
  });
}

}  // extern "C"
