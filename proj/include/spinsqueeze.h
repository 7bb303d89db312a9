/*
 * spinsqueeze C API
 *
 * Exact dynamics of a collective spin J under H = 2 kappa Jz^2 + omega Jx,
 * squeezing-parameter observables, the frozen-spin closed forms, and
 * minimization over time and drive strength.
 *
 * Conventions:
 *  - spins are passed as twice_j = 2J (so half-integer J stays exact);
 *  - kappa fixes the time unit, omega is quoted in the same units;
 *  - every computation is deterministic; n_threads only changes scheduling
 *    (0 = hardware concurrency, 1 = serial).
 *
 * Functions returning sqz_status leave outputs untouched on failure and
 * store a descriptive message retrievable with sqz_last_error() (per
 * thread). Handles are created and released by the library; records and
 * grids are caller-owned plain structs.
 */

#ifndef SPINSQUEEZE_H
#define SPINSQUEEZE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SQZ_API __declspec(dllexport)
#else
#define SQZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sqz_status {
  SQZ_OK = 0,
  SQZ_ERROR_INVALID_ARGUMENT = 1,
  SQZ_ERROR_DIMENSION_MISMATCH = 2,
  SQZ_ERROR_DOMAIN = 3,
  SQZ_ERROR_NUMERICAL = 4,
  SQZ_ERROR_INTERNAL = 5
} sqz_status;

/* Opaque handle: operators, spectral form of H, and the coherent initial
 * state (lowest Jx eigenvector) for one (2J, kappa, omega) triple. */
typedef struct sqz_model sqz_model;

/* Observables of the evolved state at one time. xi_s is the squeezing
 * parameter sqrt(2 * min_perp_variance / J); var/cov entries are the y/z
 * block of the symmetrized covariance. degenerate_mean flags times where
 * |<J>| is too small to define a perpendicular frame, in which case the
 * minimum runs over all directions. */
typedef struct sqz_record {
  double t;
  double xi_s;
  double jx_mean;
  double jy_mean;
  double jz_mean;
  double var_jz;
  double var_jy;
  double cov_yz;
  double min_perp_variance;
  int degenerate_mean;
} sqz_record;

/* t_max <= 0 selects the default horizon; n_coarse is raised to at least 16
 * and to whatever resolves the oscillation period. */
typedef struct sqz_time_grid {
  double t_max;
  int n_coarse;
  int refine;
} sqz_time_grid;

typedef struct sqz_minimum {
  double t_star;
  double xi_min;
  int at_boundary; /* minimum at t_max: horizon too short */
} sqz_minimum;

typedef struct sqz_sweep_point {
  double omega;
  double xi_min;
  double t_star;
} sqz_sweep_point;

typedef struct sqz_sweep_result {
  int64_t twice_j;
  double omega_opt;
  double t_star;
  double xi_min;
  int at_boundary; /* optimum at the edge of the omega range */
} sqz_sweep_result;

typedef struct sqz_tolerances {
  double unitarity;
  double eigen_residual;
  double eigen_orthonormality;
  double state_residual;
  double imag_residue;
  double covariance_psd;
  double degenerate_mean;
  double time_refine_bracket;
  double omega_refine_rel;
} sqz_tolerances;

typedef struct sqz_check_item {
  const char* name;
  int passed;
  double observed;
  double tolerance;
} sqz_check_item;

typedef void (*sqz_check_callback)(const sqz_check_item* item, void* user);

SQZ_API const char* sqz_version(void);
SQZ_API const char* sqz_status_name(sqz_status status);
SQZ_API const char* sqz_last_error(void); /* thread-local; "" when clear */
SQZ_API void sqz_get_tolerances(sqz_tolerances* out);

SQZ_API sqz_status sqz_model_create(int64_t twice_j, double kappa, double omega, sqz_model** out);
SQZ_API void sqz_model_destroy(sqz_model* model);
SQZ_API int64_t sqz_model_dim(const sqz_model* model); /* 0 for NULL */

SQZ_API sqz_status sqz_model_evaluate(const sqz_model* model, double t, sqz_record* out);
SQZ_API sqz_status sqz_model_evaluate_many(const sqz_model* model, const double* times, size_t n,
                                           int n_threads, sqz_record* out);

/* max(2 pi / freq, 3 / (kappa sqrt(J))), the omega term dropping out at
 * omega = 0; NaN on invalid input. j is the spin J itself. */
SQZ_API double sqz_default_horizon(double kappa, double omega, double j);

SQZ_API sqz_status sqz_min_over_time(const sqz_model* model, const sqz_time_grid* grid,
                                     int n_threads, sqz_minimum* out);

/* First interior local minimum of Var(Jz)(t); *found is 0 when the horizon
 * contains none. */
SQZ_API sqz_status sqz_first_varjz_minimum(const sqz_model* model, const sqz_time_grid* grid,
                                           int n_threads, double* t_first, int* found);

/* Logarithmic omega grid (n_omega >= 17) plus golden-section refinement.
 * When trace_out is non-NULL the full list of evaluated points is returned;
 * release it with sqz_free_sweep_trace. grid may be NULL for defaults. */
SQZ_API sqz_status sqz_optimal_omega(int64_t twice_j, double kappa, double omega_lo,
                                     double omega_hi, const sqz_time_grid* grid, int n_omega,
                                     int n_threads, sqz_sweep_result* out,
                                     sqz_sweep_point** trace_out, size_t* trace_len);
SQZ_API void sqz_free_sweep_trace(sqz_sweep_point* trace);

/* Frozen-spin closed forms; j is the spin J itself. frequency returns NaN on
 * invalid input, the others report omega = 0 as SQZ_ERROR_DOMAIN. */
SQZ_API double sqz_frozen_frequency(double kappa, double omega, double j);
SQZ_API sqz_status sqz_frozen_variances(double kappa, double omega, double j, double t,
                                        double* var_jz, double* var_jy);
SQZ_API sqz_status sqz_frozen_xi_min(double kappa, double omega, double j, double* out);
SQZ_API sqz_status sqz_frozen_optimal_time(double kappa, double omega, double j, int n,
                                           double* out);
SQZ_API sqz_status sqz_frozen_asymptotic_xi(double kappa, double omega, double j, double* out);

/* Invariant check suites over the given spins. tolerance_scale in [0, 1]
 * multiplies every tolerance (1 = standard contract; 0 forces failure and
 * exercises the failure path). The callback, if non-NULL, sees every item;
 * *all_passed reports the conjunction. */
SQZ_API sqz_status sqz_run_checks(const int64_t* twice_j_list, size_t n_spins,
                                  double tolerance_scale, sqz_check_callback callback, void* user,
                                  int* all_passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SPINSQUEEZE_H */
