#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

const std::string kCli = SQZ_CLI_PATH;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

int counter = 0;

fs::path fresh_dir() {
  const fs::path dir =
      fs::temp_directory_path() / ("sqz_cli_test_" + std::to_string(::getpid()) + "_" +
                                   std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

RunResult run_cli(const std::string& args, const fs::path& dir) {
  const fs::path log = dir / ("log_" + std::to_string(counter++) + ".txt");
  const std::string cmd = "\"" + kCli + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Row {
  double kappa_t, xi_s, jx, jy, jz, var_jz, var_jy, cov_yz;
  int degenerate;
};

std::vector<Row> parse_rows(const std::string& csv, std::string* header) {
  std::vector<Row> rows;
  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  *header = line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    Row r{};
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    REQUIRE((fields >> r.kappa_t >> r.xi_s >> r.jx >> r.jy >> r.jz >> r.var_jz >> r.var_jy >>
             r.cov_yz >> r.degenerate));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST_CASE("simulate writes the documented CSV and a manifest") {
  const fs::path dir = fresh_dir();
  const fs::path out = dir / "ts.csv";
  const RunResult r = run_cli(
      "simulate --twice-j 200 --omega 25 --t-max 0.2 --n-coarse 64 --threads 1 --out \"" +
          out.string() + "\"",
      dir);
  REQUIRE(r.exit_code == 0);

  std::string header;
  const std::vector<Row> rows = parse_rows(slurp(out), &header);
  CHECK(header == "kappa_t,xi_s,jx_mean,jy_mean,jz_mean,var_jz,var_jy,cov_yz,degenerate_mean");
  REQUIRE(rows.size() >= 65);

  CHECK(rows.front().kappa_t == 0.0);
  CHECK(std::abs(rows.front().xi_s - 1.0) < 1e-8);
  CHECK(std::abs(rows.front().jx + 100.0) < 1e-7);
  CHECK(rows.front().degenerate == 0);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].kappa_t > rows[i - 1].kappa_t);

  const json manifest = json::parse(slurp(dir / "ts.manifest.json"));
  CHECK(manifest.at("mode") == "simulate");
  CHECK(manifest.at("config").at("twice_j") == 200);
  CHECK(manifest.at("config").at("omega_over_kappa") == 25.0);
  CHECK(manifest.at("tolerances").contains("unitarity"));
  CHECK(manifest.at("duration_seconds").get<double>() >= 0.0);
  CHECK(manifest.at("summary").contains("xi_min_on_grid"));
}

TEST_CASE("simulate output is byte-identical across runs and worker counts") {
  const fs::path dir = fresh_dir();
  const fs::path a = dir / "a.csv", b = dir / "b.csv";
  const std::string common = "simulate --twice-j 120 --omega 10 --t-max 0.3 --n-coarse 96 --out ";
  REQUIRE(run_cli(common + "\"" + a.string() + "\" --threads 1", dir).exit_code == 0);
  REQUIRE(run_cli(common + "\"" + b.string() + "\" --threads 4", dir).exit_code == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("CSV xi column round-trips from the variance columns") {
  // Where the mean spin is non-degenerate it lies along x, so xi can be
  // recomputed from the y/z covariance block alone.
  const fs::path dir = fresh_dir();
  const fs::path out = dir / "rt.csv";
  REQUIRE(run_cli("simulate --twice-j 200 --omega 25 --t-max 0.4 --n-coarse 128 --out \"" +
                      out.string() + "\"",
                  dir)
              .exit_code == 0);
  std::string header;
  const std::vector<Row> rows = parse_rows(slurp(out), &header);
  int checked = 0;
  for (const Row& r : rows) {
    if (r.degenerate != 0) continue;
    const double half_trace = 0.5 * (r.var_jy + r.var_jz);
    const double disc =
        std::sqrt(0.25 * (r.var_jy - r.var_jz) * (r.var_jy - r.var_jz) + r.cov_yz * r.cov_yz);
    const double xi = std::sqrt(2.0 * std::max(half_trace - disc, 0.0) / 100.0);
    CHECK(std::abs(xi - r.xi_s) < 1e-9);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("usage errors exit with code 2") {
  const fs::path dir = fresh_dir();
  CHECK(run_cli("simulate --no-such-flag", dir).exit_code == 2);
  CHECK(run_cli("simulate --twice-j 10", dir).exit_code == 2);  // --out missing
  CHECK(run_cli("simulate --twice-j 0 --out \"" + (dir / "x.csv").string() + "\"", dir).exit_code ==
        2);
  CHECK(run_cli("simulate --twice-j 10 --n-coarse 8 --out \"" + (dir / "x.csv").string() + "\"",
                dir)
            .exit_code == 2);
  CHECK(run_cli("sweep --j-list \"\" --out \"" + (dir / "s.csv").string() + "\"", dir).exit_code ==
        2);
  CHECK(run_cli("sweep --out \"" + (dir / "s.csv").string() + "\"", dir).exit_code == 2);
  CHECK(run_cli("frozen-compare --twice-j 10 --omega 0 --out \"" + (dir / "f.csv").string() + "\"",
                dir)
            .exit_code == 2);
  CHECK(run_cli("", dir).exit_code == 2);  // a subcommand is required
}

TEST_CASE("unwritable output path exits with code 3") {
  const fs::path dir = fresh_dir();
  CHECK(run_cli("simulate --twice-j 10 --out /nonexistent_dir_sqz/x.csv", dir).exit_code == 3);
}

TEST_CASE("check passes normally and fails when tolerances are corrupted") {
  const fs::path dir = fresh_dir();
  const RunResult ok = run_cli("check --twice-j-list 1,2,20", dir);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("[PASS]") != std::string::npos);
  CHECK(ok.output.find("J=1/2") != std::string::npos);
  CHECK(ok.output.find("ALL CHECKS PASSED") != std::string::npos);

  const RunResult bad = run_cli("check --twice-j-list 1,2 --corrupt-tolerances", dir);
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("[FAIL]") != std::string::npos);
}

TEST_CASE("check default covers J = 1/2, 1, 10 and 100") {
  const fs::path dir = fresh_dir();
  const RunResult r = run_cli("check", dir);
  CHECK(r.exit_code == 0);
  for (const char* label : {"J=1/2", "J=1", "J=10", "J=100"}) {
    CHECK(r.output.find(label) != std::string::npos);
  }
}

TEST_CASE("sweep accepts half-integer spins in --j-list") {
  const fs::path dir = fresh_dir();
  const fs::path out = dir / "half.csv";
  REQUIRE(run_cli("sweep --j-list 2.5 --omega-lo 0.5 --omega-hi 10 --out \"" + out.string() +
                      "\"",
                  dir)
              .exit_code == 0);
  CHECK(slurp(out).find("\n5,") != std::string::npos);  // twice_j = 5
  CHECK(run_cli("sweep --j-list 0.3 --out \"" + out.string() + "\"", dir).exit_code == 2);
}

TEST_CASE("config file supplies values and CLI flags take precedence") {
  const fs::path dir = fresh_dir();
  const fs::path cfg_path = dir / "run.json";
  {
    std::ofstream cfg(cfg_path);
    cfg << R"({"twice_j": 40, "omega_over_kappa": 5.0, "t_max_kappa": 0.2, "n_coarse": 32})";
  }
  const fs::path out = dir / "cfg.csv";
  REQUIRE(run_cli("simulate --config \"" + cfg_path.string() + "\" --omega 0 --out \"" +
                      out.string() + "\"",
                  dir)
              .exit_code == 0);
  const json manifest = json::parse(slurp(dir / "cfg.manifest.json"));
  CHECK(manifest.at("config").at("twice_j") == 40);          // from the file
  CHECK(manifest.at("config").at("omega_over_kappa") == 0.0);  // flag wins
  CHECK(manifest.at("config").at("n_coarse") == 32);
}

TEST_CASE("sweep emits per-spin optima and an optional trace") {
  const fs::path dir = fresh_dir();
  const fs::path out = dir / "sweep.csv", trace = dir / "trace.csv";
  const RunResult r = run_cli("sweep --j-list 10 --omega-lo 0.5 --omega-hi 20 --out \"" +
                                  out.string() + "\" --trace \"" + trace.string() + "\"",
                              dir);
  REQUIRE(r.exit_code == 0);

  const std::string csv = slurp(out);
  CHECK(csv.rfind("twice_j,omega_opt_over_kappa,kappa_t_star,xi_min\n", 0) == 0);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  REQUIRE(std::getline(in, line));
  std::replace(line.begin(), line.end(), ',', ' ');
  long twice_j = 0;
  double omega_opt = 0.0, t_star = 0.0, xi_min = 0.0;
  std::istringstream fields(line);
  REQUIRE((fields >> twice_j >> omega_opt >> t_star >> xi_min));
  CHECK(twice_j == 20);
  CHECK(xi_min < 1.0);
  CHECK(omega_opt > 0.5);
  CHECK(t_star > 0.0);

  const std::string trace_csv = slurp(trace);
  CHECK(trace_csv.rfind("twice_j,omega_over_kappa,xi_min,kappa_t_star\n", 0) == 0);
  CHECK(std::count(trace_csv.begin(), trace_csv.end(), '\n') >= 18);
}

TEST_CASE("sweep output is byte-identical across worker counts") {
  const fs::path dir = fresh_dir();
  const fs::path a = dir / "sa.csv", b = dir / "sb.csv";
  const std::string common = "sweep --j-list 10 --omega-lo 1 --omega-hi 20 --out ";
  REQUIRE(run_cli(common + "\"" + a.string() + "\" --threads 1", dir).exit_code == 0);
  REQUIRE(run_cli(common + "\"" + b.string() + "\" --threads 3", dir).exit_code == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("frozen-compare reports agreement in its validity regime") {
  const fs::path dir = fresh_dir();
  const fs::path out = dir / "fc.csv";
  const RunResult r = run_cli(
      "frozen-compare --twice-j 200 --omega 100 --out \"" + out.string() + "\"", dir);
  REQUIRE(r.exit_code == 0);

  const std::string csv = slurp(out);
  CHECK(csv.rfind("kappa_t,var_jz_exact,var_jz_frozen,xi_exact,xi_frozen\n", 0) == 0);
  CHECK(csv.find("# xi_min_exact=") != std::string::npos);
  CHECK(csv.find("# omega_est=") != std::string::npos);

  // First data row: both variance columns equal J/2 = 50 at t = 0.
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  REQUIRE(std::getline(in, line));
  std::replace(line.begin(), line.end(), ',', ' ');
  double t = 0.0, vz_exact = 0.0, vz_frozen = 0.0, xi_exact = 0.0, xi_frozen = 0.0;
  std::istringstream fields(line);
  REQUIRE((fields >> t >> vz_exact >> vz_frozen >> xi_exact >> xi_frozen));
  CHECK(t == 0.0);
  CHECK(vz_frozen == 50.0);
  CHECK(std::abs(vz_exact - 50.0) < 1e-8);

  const json manifest = json::parse(slurp(dir / "fc.manifest.json"));
  CHECK(manifest.at("summary").at("rel_err_xi_min").get<double>() < 0.05);
  CHECK(manifest.at("summary").at("rel_err_frequency").get<double>() < 0.05);
}

TEST_CASE("frozen-compare outside the validity regime still reports, without enforcing") {
  const fs::path dir = fresh_dir();
  const fs::path out = dir / "fc2.csv";
  const RunResult r =
      run_cli("frozen-compare --twice-j 200 --omega 2 --out \"" + out.string() + "\"", dir);
  REQUIRE(r.exit_code == 0);
  const json manifest = json::parse(slurp(dir / "fc2.manifest.json"));
  CHECK(manifest.at("summary").contains("rel_err_xi_min"));
  CHECK(manifest.at("summary").contains("rel_err_frequency"));
}
