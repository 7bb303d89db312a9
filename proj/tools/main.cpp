// spinsqueeze command-line interface.
//
// Modes: simulate (time series of the squeezing parameter and spin
// observables), sweep (optimal drive per spin), frozen-compare (exact vs
// closed-form dynamics), check (invariant suite). All quantities are in
// kappa units: omega means omega/kappa and times are kappa*t.
//
// Exit codes: 0 ok, 1 check failure, 2 usage, 3 I/O, 4 numerical.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinsqueeze.h"

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumerical = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_status(sqz_status status) {
  if (status == SQZ_OK) return;
  const std::string message =
      std::string(sqz_status_name(status)) + ": " + sqz_last_error();
  if (status == SQZ_ERROR_INVALID_ARGUMENT || status == SQZ_ERROR_DOMAIN ||
      status == SQZ_ERROR_DIMENSION_MISMATCH) {
    throw UsageError(message);
  }
  throw NumericalError(message);
}

std::string fmt(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

// Write-then-rename so readers never observe a partial file.
void atomic_write(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    if (!fs::exists(path.parent_path(), ec)) {
      throw IoError("output directory does not exist: " + path.parent_path().string());
    }
  }
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << contents;
    if (!out) throw IoError("failed while writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + " to " + path.string());
}

fs::path default_manifest_path(const fs::path& out) {
  fs::path p = out;
  if (p.extension() == ".csv") p.replace_extension();
  p += ".manifest.json";
  return p;
}

json tolerances_json() {
  sqz_tolerances t{};
  sqz_get_tolerances(&t);
  return json{{"unitarity", t.unitarity},
              {"eigen_residual", t.eigen_residual},
              {"eigen_orthonormality", t.eigen_orthonormality},
              {"state_residual", t.state_residual},
              {"imag_residue", t.imag_residue},
              {"covariance_psd", t.covariance_psd},
              {"degenerate_mean", t.degenerate_mean},
              {"time_refine_bracket", t.time_refine_bracket},
              {"omega_refine_rel", t.omega_refine_rel}};
}

class ManifestWriter {
 public:
  ManifestWriter(std::string mode, fs::path path)
      : path_(std::move(path)), start_(std::chrono::steady_clock::now()) {
    doc_["artifact"] = json{{"name", "spinsqueeze"}, {"version", sqz_version()}};
    doc_["mode"] = std::move(mode);
    doc_["tolerances"] = tolerances_json();
    doc_["warnings"] = json::array();
  }

  void set_config(json config) { doc_["config"] = std::move(config); }
  void set_summary(json summary) { doc_["summary"] = std::move(summary); }
  void add_warning(const std::string& warning) { doc_["warnings"].push_back(warning); }

  void write() {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    doc_["duration_seconds"] = elapsed.count();
    atomic_write(path_, doc_.dump(2) + "\n");
  }

 private:
  json doc_;
  fs::path path_;
  std::chrono::steady_clock::time_point start_;
};

// Model handle with RAII.
struct ModelHandle {
  sqz_model* ptr = nullptr;

  ModelHandle(int64_t twice_j, double omega) {
    check_status(sqz_model_create(twice_j, 1.0, omega, &ptr));
  }
  ~ModelHandle() { sqz_model_destroy(ptr); }
  ModelHandle(const ModelHandle&) = delete;
  ModelHandle& operator=(const ModelHandle&) = delete;
};

// Configuration file support: JSON document whose keys mirror the long
// option names. Precedence is CLI flag > file value > built-in default.
json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  try {
    return json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError("config file " + path + " is not valid JSON: " + e.what());
  }
}

template <typename T>
void apply_config(const json& cfg, const CLI::App& app, const std::string& flag,
                  const std::string& key, T& target) {
  if (!cfg.contains(key)) return;
  if (app.count(flag) > 0) return;  // explicit flag wins
  try {
    target = cfg.at(key).get<T>();
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "' has the wrong type");
  }
}

struct CommonOptions {
  std::string out;
  std::string manifest;
  std::string config_path;
  int threads = 0;
  double t_max = 0.0;  // 0 = default horizon
  int n_coarse = 512;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool needs_out) {
  auto* out = cmd->add_option("--out", opt.out, "Output CSV path");
  if (needs_out) out->required();
  cmd->add_option("--manifest", opt.manifest, "Manifest path (default: <out>.manifest.json)");
  cmd->add_option("--config", opt.config_path, "JSON config file (CLI flags take precedence)");
  cmd->add_option("--threads", opt.threads, "Worker threads (0 = hardware)")->check(CLI::Range(0, 4096));
  cmd->add_option("--t-max", opt.t_max, "Time horizon kappa*t (0 = automatic)");
  cmd->add_option("--n-coarse", opt.n_coarse, "Coarse time samples (>= 16)");
}

void validate_common(const CommonOptions& opt) {
  if (opt.t_max < 0.0 || !std::isfinite(opt.t_max))
    throw UsageError("--t-max must be a finite value >= 0");
  if (opt.n_coarse < 16) throw UsageError("--n-coarse must be at least 16");
}

json common_config_json(const CommonOptions& opt) {
  return json{{"t_max_kappa", opt.t_max},
              {"n_coarse", opt.n_coarse},
              {"threads", opt.threads},
              {"output_path", opt.out}};
}

std::vector<double> make_time_grid(int64_t twice_j, double omega, const CommonOptions& opt,
                                   int* n_effective, double* t_max_effective) {
  double t_max = opt.t_max;
  if (t_max <= 0.0) {
    t_max = sqz_default_horizon(1.0, omega, 0.5 * static_cast<double>(twice_j));
    if (!std::isfinite(t_max)) throw UsageError("cannot determine a default horizon");
  }
  int n = opt.n_coarse;
  if (omega > 0.0) {
    // Resolve the oscillation so the series cannot alias the fast dynamics.
    const double freq = sqz_frozen_frequency(1.0, omega, 0.5 * static_cast<double>(twice_j));
    const double needed = std::ceil(t_max / (M_PI / (4.0 * freq)));
    if (needed >= 1e7) throw UsageError("time grid would exceed 1e7 samples; shorten --t-max");
    if (needed > n) n = static_cast<int>(needed);
  }
  const double step = t_max / n;
  std::vector<double> times(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) times[static_cast<std::size_t>(i)] = step * i;
  *n_effective = n;
  *t_max_effective = t_max;
  return times;
}

std::string records_csv(const std::vector<sqz_record>& records) {
  std::ostringstream csv;
  csv << "kappa_t,xi_s,jx_mean,jy_mean,jz_mean,var_jz,var_jy,cov_yz,degenerate_mean\n";
  for (const sqz_record& r : records) {
    csv << fmt(r.t) << ',' << fmt(r.xi_s) << ',' << fmt(r.jx_mean) << ',' << fmt(r.jy_mean)
        << ',' << fmt(r.jz_mean) << ',' << fmt(r.var_jz) << ',' << fmt(r.var_jy) << ','
        << fmt(r.cov_yz) << ',' << (r.degenerate_mean ? 1 : 0) << '\n';
  }
  return csv.str();
}

// ---------------------------------------------------------------------------
// simulate

int run_simulate(int64_t twice_j, double omega, const CommonOptions& opt) {
  validate_common(opt);
  if (omega < 0.0 || !std::isfinite(omega)) throw UsageError("--omega must be finite and >= 0");
  if (twice_j < 1) throw UsageError("--twice-j must be >= 1");

  ManifestWriter manifest("simulate",
                          opt.manifest.empty() ? default_manifest_path(opt.out)
                                               : fs::path(opt.manifest));

  int n_effective = 0;
  double t_max_effective = 0.0;
  const std::vector<double> times = make_time_grid(twice_j, omega, opt, &n_effective, &t_max_effective);
  if (n_effective != opt.n_coarse) {
    manifest.add_warning("n_coarse raised to " + std::to_string(n_effective) +
                         " to resolve the oscillation period");
  }

  json config = common_config_json(opt);
  config["twice_j"] = twice_j;
  config["omega_over_kappa"] = omega;
  config["n_coarse_effective"] = n_effective;
  config["t_max_kappa_effective"] = t_max_effective;
  manifest.set_config(config);

  ModelHandle model(twice_j, omega);
  std::vector<sqz_record> records(times.size());
  check_status(sqz_model_evaluate_many(model.ptr, times.data(), times.size(), opt.threads,
                                       records.data()));

  atomic_write(opt.out, records_csv(records));

  double xi_min = records.front().xi_s, t_at_min = records.front().t;
  int degenerate = 0;
  for (const sqz_record& r : records) {
    if (r.xi_s < xi_min) {
      xi_min = r.xi_s;
      t_at_min = r.t;
    }
    degenerate += r.degenerate_mean;
  }
  manifest.set_summary(json{{"rows", records.size()},
                            {"xi_min_on_grid", xi_min},
                            {"kappa_t_at_min", t_at_min},
                            {"degenerate_rows", degenerate},
                            {"jx_final", records.back().jx_mean}});
  manifest.write();
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

int run_sweep(const std::vector<double>& j_list, double omega_lo, double omega_hi, int n_omega,
              const std::string& trace_path, const CommonOptions& opt) {
  validate_common(opt);
  if (j_list.empty()) throw UsageError("--j-list must not be empty");
  if (!(omega_lo > 0.0) || !(omega_hi > omega_lo))
    throw UsageError("--omega-lo/--omega-hi must satisfy 0 < lo < hi");
  if (n_omega < 17) throw UsageError("--n-omega must be at least 17");

  std::vector<int64_t> twice_js;
  for (const double j : j_list) {
    const double doubled = 2.0 * j;
    const auto rounded = static_cast<int64_t>(std::llround(doubled));
    if (!std::isfinite(j) || std::abs(doubled - static_cast<double>(rounded)) > 1e-9 || rounded < 1)
      throw UsageError("--j-list entries must be positive integers or half-integers");
    twice_js.push_back(rounded);
  }

  ManifestWriter manifest("sweep",
                          opt.manifest.empty() ? default_manifest_path(opt.out)
                                               : fs::path(opt.manifest));
  json config = common_config_json(opt);
  config["twice_j_list"] = twice_js;
  config["omega_range"] = json::array({omega_lo, omega_hi});
  config["n_omega"] = n_omega;
  config["trace_path"] = trace_path;
  manifest.set_config(config);

  const sqz_time_grid grid{opt.t_max, opt.n_coarse, 1};

  std::ostringstream csv, trace_csv;
  csv << "twice_j,omega_opt_over_kappa,kappa_t_star,xi_min\n";
  trace_csv << "twice_j,omega_over_kappa,xi_min,kappa_t_star\n";
  json summary = json::array();

  for (const int64_t twice_j : twice_js) {
    sqz_sweep_result result{};
    sqz_sweep_point* trace = nullptr;
    size_t trace_len = 0;
    check_status(sqz_optimal_omega(twice_j, 1.0, omega_lo, omega_hi, &grid, n_omega, opt.threads,
                                   &result, trace_path.empty() ? nullptr : &trace,
                                   trace_path.empty() ? nullptr : &trace_len));
    csv << twice_j << ',' << fmt(result.omega_opt) << ',' << fmt(result.t_star) << ','
        << fmt(result.xi_min) << '\n';
    if (trace != nullptr) {
      for (size_t i = 0; i < trace_len; ++i) {
        trace_csv << twice_j << ',' << fmt(trace[i].omega) << ',' << fmt(trace[i].xi_min) << ','
                  << fmt(trace[i].t_star) << '\n';
      }
      sqz_free_sweep_trace(trace);
    }
    if (result.at_boundary) {
      manifest.add_warning("optimum at the omega range boundary for twice_j=" +
                           std::to_string(twice_j) + "; widen --omega-lo/--omega-hi");
    }
    summary.push_back(json{{"twice_j", twice_j},
                           {"omega_opt_over_kappa", result.omega_opt},
                           {"kappa_t_star", result.t_star},
                           {"xi_min", result.xi_min},
                           {"at_boundary", result.at_boundary != 0}});
  }

  atomic_write(opt.out, csv.str());
  if (!trace_path.empty()) atomic_write(trace_path, trace_csv.str());
  manifest.set_summary(summary);
  manifest.write();
  return kExitOk;
}

// ---------------------------------------------------------------------------
// frozen-compare

int run_frozen_compare(int64_t twice_j, double omega, const CommonOptions& opt) {
  validate_common(opt);
  if (twice_j < 1) throw UsageError("--twice-j must be >= 1");
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw UsageError("frozen-compare requires --omega > 0 (the model divides by omega)");

  const double j = 0.5 * static_cast<double>(twice_j);
  ManifestWriter manifest("frozen-compare",
                          opt.manifest.empty() ? default_manifest_path(opt.out)
                                               : fs::path(opt.manifest));

  int n_effective = 0;
  double t_max_effective = 0.0;
  const std::vector<double> times = make_time_grid(twice_j, omega, opt, &n_effective, &t_max_effective);
  json config = common_config_json(opt);
  config["twice_j"] = twice_j;
  config["omega_over_kappa"] = omega;
  config["n_coarse_effective"] = n_effective;
  config["t_max_kappa_effective"] = t_max_effective;
  manifest.set_config(config);

  ModelHandle model(twice_j, omega);
  std::vector<sqz_record> records(times.size());
  check_status(sqz_model_evaluate_many(model.ptr, times.data(), times.size(), opt.threads,
                                       records.data()));

  std::ostringstream csv;
  csv << "kappa_t,var_jz_exact,var_jz_frozen,xi_exact,xi_frozen\n";
  for (const sqz_record& r : records) {
    double var_jz_frozen = 0.0, var_jy_frozen = 0.0;
    check_status(sqz_frozen_variances(1.0, omega, j, r.t, &var_jz_frozen, &var_jy_frozen));
    const double xi_frozen = std::sqrt(2.0 * var_jz_frozen / j);
    csv << fmt(r.t) << ',' << fmt(r.var_jz) << ',' << fmt(var_jz_frozen) << ',' << fmt(r.xi_s)
        << ',' << fmt(xi_frozen) << '\n';
  }

  // Summary: minimum squeezing and the oscillation frequency estimated from
  // the first Var(Jz) minimum as pi / (2 t_first).
  const sqz_time_grid grid{opt.t_max, opt.n_coarse, 1};
  sqz_minimum tm{};
  check_status(sqz_min_over_time(model.ptr, &grid, opt.threads, &tm));
  double xi_frozen_min = 0.0;
  check_status(sqz_frozen_xi_min(1.0, omega, j, &xi_frozen_min));
  const double freq_frozen = sqz_frozen_frequency(1.0, omega, j);

  double t_first = 0.0;
  int found = 0;
  check_status(sqz_first_varjz_minimum(model.ptr, &grid, opt.threads, &t_first, &found));
  const double freq_estimate = found ? (M_PI / (2.0 * t_first)) : std::nan("");
  if (!found) manifest.add_warning("no interior Var(Jz) minimum inside the horizon");

  const double xi_rel_err = std::abs(tm.xi_min - xi_frozen_min) / xi_frozen_min;
  const double freq_rel_err =
      found ? std::abs(freq_estimate - freq_frozen) / freq_frozen : std::nan("");
  csv << "# xi_min_exact=" << fmt(tm.xi_min) << " xi_min_frozen=" << fmt(xi_frozen_min)
      << " rel_err_xi_min=" << fmt(xi_rel_err) << '\n';
  csv << "# omega_est=" << fmt(freq_estimate) << " omega_frozen=" << fmt(freq_frozen)
      << " rel_err_frequency=" << fmt(freq_rel_err) << '\n';
  atomic_write(opt.out, csv.str());

  if (tm.at_boundary) manifest.add_warning("xi minimum at the horizon boundary; extend --t-max");
  manifest.set_summary(json{{"xi_min_exact", tm.xi_min},
                            {"xi_min_frozen", xi_frozen_min},
                            {"rel_err_xi_min", xi_rel_err},
                            {"kappa_t_star", tm.t_star},
                            {"omega_est", freq_estimate},
                            {"omega_frozen", freq_frozen},
                            {"rel_err_frequency", freq_rel_err}});
  manifest.write();
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check

void print_check_item(const sqz_check_item* item, void* user) {
  auto* failures = static_cast<int*>(user);
  if (!item->passed) ++(*failures);
  std::printf("[%s] %-32s observed=%-12.3e tolerance=%.3e\n", item->passed ? "PASS" : "FAIL",
              item->name, item->observed, item->tolerance);
}

int run_check(const std::vector<int64_t>& twice_j_list, bool corrupt_tolerances,
              const std::string& manifest_path) {
  std::vector<int64_t> spins = twice_j_list;
  if (spins.empty()) spins = {1, 2, 20, 200};  // J = 1/2, 1, 10, 100
  for (const int64_t s : spins) {
    if (s < 1) throw UsageError("--twice-j-list entries must be >= 1");
  }

  const double scale = corrupt_tolerances ? 0.0 : 1.0;
  int failures = 0;
  int all_passed = 0;
  check_status(sqz_run_checks(spins.data(), spins.size(), scale, &print_check_item, &failures,
                              &all_passed));
  std::printf("%s: %d failure(s)\n", all_passed ? "ALL CHECKS PASSED" : "CHECKS FAILED", failures);

  if (!manifest_path.empty()) {
    ManifestWriter manifest("check", manifest_path);
    manifest.set_config(json{{"twice_j_list", spins}, {"tolerance_scale", scale}});
    manifest.set_summary(json{{"all_passed", all_passed == 1}, {"failures", failures}});
    manifest.write();
  }
  return all_passed ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  // Pin the BLAS pool unless the caller chose otherwise: output bytes must
  // not depend on how the eigensolver backend schedules itself.
  setenv("OPENBLAS_NUM_THREADS", "1", /*overwrite=*/0);

  CLI::App app{"Collective-spin squeezing under twisting plus a transverse drive"};
  app.require_subcommand(1);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Time series of xi_s and spin observables");
  int64_t sim_twice_j = 200;
  double sim_omega = 0.0;
  CommonOptions sim_opt;
  simulate->add_option("--twice-j", sim_twice_j, "2J (integer >= 1)");
  simulate->add_option("--omega", sim_omega, "Drive strength omega/kappa");
  add_common(simulate, sim_opt, /*needs_out=*/true);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Optimal omega and xi_min per spin");
  std::vector<double> sweep_j_list;
  double sweep_lo = 0.5, sweep_hi = 50.0;
  int sweep_n_omega = 17;
  std::string sweep_trace;
  CommonOptions sweep_opt;
  sweep->add_option("--j-list", sweep_j_list, "Spin values J (integers or half-integers)")
      ->delimiter(',');
  sweep->add_option("--omega-lo", sweep_lo, "Lower omega/kappa bound");
  sweep->add_option("--omega-hi", sweep_hi, "Upper omega/kappa bound");
  sweep->add_option("--n-omega", sweep_n_omega, "Coarse omega grid points (>= 17)");
  sweep->add_option("--trace", sweep_trace, "Companion CSV with every evaluated point");
  add_common(sweep, sweep_opt, /*needs_out=*/true);

  // frozen-compare
  auto* frozen = app.add_subcommand("frozen-compare", "Exact vs frozen-spin variances");
  int64_t frozen_twice_j = 200;
  double frozen_omega = 100.0;
  CommonOptions frozen_opt;
  frozen->add_option("--twice-j", frozen_twice_j, "2J (integer >= 1)");
  frozen->add_option("--omega", frozen_omega, "Drive strength omega/kappa (> 0)");
  add_common(frozen, frozen_opt, /*needs_out=*/true);

  // check
  auto* check = app.add_subcommand("check", "Run the invariant check suite");
  std::vector<int64_t> check_spins;
  std::string check_manifest, check_config;
  bool corrupt = false;
  check->add_option("--twice-j-list", check_spins, "Spins to check, as 2J")->delimiter(',');
  check->add_option("--manifest", check_manifest, "Optional manifest path");
  check->add_option("--config", check_config, "JSON config file");
  check->add_flag("--corrupt-tolerances", corrupt,
                  "Test hook: zero every tolerance so all checks fail")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (simulate->parsed()) {
      if (!sim_opt.config_path.empty()) {
        const json cfg = load_config_file(sim_opt.config_path);
        apply_config(cfg, *simulate, "--twice-j", "twice_j", sim_twice_j);
        apply_config(cfg, *simulate, "--omega", "omega_over_kappa", sim_omega);
        apply_config(cfg, *simulate, "--t-max", "t_max_kappa", sim_opt.t_max);
        apply_config(cfg, *simulate, "--n-coarse", "n_coarse", sim_opt.n_coarse);
        apply_config(cfg, *simulate, "--threads", "threads", sim_opt.threads);
        apply_config(cfg, *simulate, "--out", "output_path", sim_opt.out);
        apply_config(cfg, *simulate, "--manifest", "manifest_path", sim_opt.manifest);
      }
      return run_simulate(sim_twice_j, sim_omega, sim_opt);
    }
    if (sweep->parsed()) {
      if (!sweep_opt.config_path.empty()) {
        const json cfg = load_config_file(sweep_opt.config_path);
        apply_config(cfg, *sweep, "--j-list", "j_list", sweep_j_list);
        apply_config(cfg, *sweep, "--omega-lo", "omega_lo", sweep_lo);
        apply_config(cfg, *sweep, "--omega-hi", "omega_hi", sweep_hi);
        apply_config(cfg, *sweep, "--n-omega", "n_omega", sweep_n_omega);
        apply_config(cfg, *sweep, "--trace", "trace_path", sweep_trace);
        apply_config(cfg, *sweep, "--t-max", "t_max_kappa", sweep_opt.t_max);
        apply_config(cfg, *sweep, "--n-coarse", "n_coarse", sweep_opt.n_coarse);
        apply_config(cfg, *sweep, "--threads", "threads", sweep_opt.threads);
        apply_config(cfg, *sweep, "--out", "output_path", sweep_opt.out);
        apply_config(cfg, *sweep, "--manifest", "manifest_path", sweep_opt.manifest);
      }
      return run_sweep(sweep_j_list, sweep_lo, sweep_hi, sweep_n_omega, sweep_trace, sweep_opt);
    }
    if (frozen->parsed()) {
      if (!frozen_opt.config_path.empty()) {
        const json cfg = load_config_file(frozen_opt.config_path);
        apply_config(cfg, *frozen, "--twice-j", "twice_j", frozen_twice_j);
        apply_config(cfg, *frozen, "--omega", "omega_over_kappa", frozen_omega);
        apply_config(cfg, *frozen, "--t-max", "t_max_kappa", frozen_opt.t_max);
        apply_config(cfg, *frozen, "--n-coarse", "n_coarse", frozen_opt.n_coarse);
        apply_config(cfg, *frozen, "--threads", "threads", frozen_opt.threads);
        apply_config(cfg, *frozen, "--out", "output_path", frozen_opt.out);
        apply_config(cfg, *frozen, "--manifest", "manifest_path", frozen_opt.manifest);
      }
      return run_frozen_compare(frozen_twice_j, frozen_omega, frozen_opt);
    }
    if (check->parsed()) {
      if (!check_config.empty()) {
        const json cfg = load_config_file(check_config);
        apply_config(cfg, *check, "--twice-j-list", "twice_j_list", check_spins);
        apply_config(cfg, *check, "--manifest", "manifest_path", check_manifest);
      }
      return run_check(check_spins, corrupt, check_manifest);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
