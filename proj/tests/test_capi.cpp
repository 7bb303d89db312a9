#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "spinsqueeze.h"

TEST_CASE("version and status strings") {
  CHECK(sqz_version() != nullptr);
  CHECK(std::strlen(sqz_version()) > 0);
  CHECK(std::string(sqz_status_name(SQZ_OK)) == "ok");
  CHECK(sqz_status_name(SQZ_ERROR_DOMAIN) != nullptr);
}

TEST_CASE("tolerances are exposed") {
  sqz_tolerances t{};
  sqz_get_tolerances(&t);
  CHECK(t.unitarity == 1e-10);
  CHECK(t.omega_refine_rel == 1e-2);
}

TEST_CASE("model lifecycle and evaluation") {
  sqz_model* model = nullptr;
  REQUIRE(sqz_model_create(200, 1.0, 25.0, &model) == SQZ_OK);
  REQUIRE(model != nullptr);
  CHECK(sqz_model_dim(model) == 201);

  sqz_record rec{};
  REQUIRE(sqz_model_evaluate(model, 0.0, &rec) == SQZ_OK);
  CHECK(rec.t == 0.0);
  CHECK(std::abs(rec.xi_s - 1.0) < 1e-8);
  CHECK(std::abs(rec.jx_mean + 100.0) < 1e-8);
  CHECK(std::abs(rec.var_jz - 50.0) < 1e-8);
  CHECK(rec.degenerate_mean == 0);

  sqz_model_destroy(model);
}

TEST_CASE("evaluate_many matches single evaluations bitwise") {
  sqz_model* model = nullptr;
  REQUIRE(sqz_model_create(80, 1.0, 10.0, &model) == SQZ_OK);

  std::vector<double> times;
  for (int i = 0; i < 33; ++i) times.push_back(0.01 * i);
  std::vector<sqz_record> many(times.size());
  REQUIRE(sqz_model_evaluate_many(model, times.data(), times.size(), 3, many.data()) == SQZ_OK);

  for (std::size_t i = 0; i < times.size(); ++i) {
    sqz_record one{};
    REQUIRE(sqz_model_evaluate(model, times[i], &one) == SQZ_OK);
    CHECK(one.xi_s == many[i].xi_s);
    CHECK(one.jx_mean == many[i].jx_mean);
    CHECK(one.var_jz == many[i].var_jz);
  }
  sqz_model_destroy(model);
}

TEST_CASE("argument errors are reported, not crashed on") {
  sqz_model* model = nullptr;
  CHECK(sqz_model_create(0, 1.0, 1.0, &model) == SQZ_ERROR_INVALID_ARGUMENT);
  CHECK(std::strlen(sqz_last_error()) > 0);
  CHECK(sqz_model_create(2, -1.0, 1.0, &model) == SQZ_ERROR_INVALID_ARGUMENT);
  CHECK(sqz_model_create(2, 1.0, 1.0, nullptr) == SQZ_ERROR_INVALID_ARGUMENT);
  CHECK(sqz_model_evaluate(nullptr, 0.0, nullptr) == SQZ_ERROR_INVALID_ARGUMENT);
  CHECK(sqz_model_dim(nullptr) == 0);
  sqz_model_destroy(nullptr);  // must be a no-op
}

TEST_CASE("a successful call clears the error message") {
  sqz_model* model = nullptr;
  CHECK(sqz_model_create(0, 1.0, 1.0, &model) == SQZ_ERROR_INVALID_ARGUMENT);
  CHECK(std::strlen(sqz_last_error()) > 0);
  REQUIRE(sqz_model_create(2, 1.0, 1.0, &model) == SQZ_OK);
  CHECK(std::strlen(sqz_last_error()) == 0);
  sqz_model_destroy(model);
}

TEST_CASE("default horizon") {
  CHECK(sqz_default_horizon(1.0, 0.0, 100.0) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(std::isnan(sqz_default_horizon(0.0, 1.0, 100.0)));
}

TEST_CASE("minimum over time through the C surface") {
  sqz_model* model = nullptr;
  REQUIRE(sqz_model_create(200, 1.0, 100.0, &model) == SQZ_OK);
  sqz_minimum tm{};
  REQUIRE(sqz_min_over_time(model, nullptr, 2, &tm) == SQZ_OK);
  CHECK(tm.at_boundary == 0);
  CHECK(std::abs(tm.xi_min - 0.4472135954999579) < 0.05 * 0.4472135954999579);

  double t_first = 0.0;
  int found = 0;
  REQUIRE(sqz_first_varjz_minimum(model, nullptr, 2, &t_first, &found) == SQZ_OK);
  CHECK(found == 1);
  CHECK(t_first > 0.0);
  sqz_model_destroy(model);
}

TEST_CASE("optimal omega with a trace buffer") {
  sqz_sweep_result result{};
  sqz_sweep_point* trace = nullptr;
  size_t trace_len = 0;
  REQUIRE(sqz_optimal_omega(60, 1.0, 0.5, 30.0, nullptr, 17, 2, &result, &trace, &trace_len) ==
          SQZ_OK);
  CHECK(result.twice_j == 60);
  CHECK(result.xi_min < 1.0);
  REQUIRE(trace != nullptr);
  REQUIRE(trace_len >= 17);
  double best = 1e300;
  for (size_t i = 0; i < trace_len; ++i) best = std::min(best, trace[i].xi_min);
  CHECK(result.xi_min <= best + 1e-12);
  sqz_free_sweep_trace(trace);

  CHECK(sqz_optimal_omega(60, 1.0, -1.0, 30.0, nullptr, 17, 1, &result, nullptr, nullptr) ==
        SQZ_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("frozen closed forms through the C surface") {
  CHECK(sqz_frozen_frequency(1.0, 10.0, 500.0) ==
        doctest::Approx(141.77446878757826).epsilon(1e-14));
  CHECK(std::isnan(sqz_frozen_frequency(-1.0, 1.0, 1.0)));

  double var_jz = 0.0, var_jy = 0.0;
  REQUIRE(sqz_frozen_variances(1.0, 10.0, 500.0, 0.0, &var_jz, &var_jy) == SQZ_OK);
  CHECK(var_jz == doctest::Approx(250.0).epsilon(1e-14));
  CHECK(var_jy == doctest::Approx(250.0).epsilon(1e-14));
  CHECK(sqz_frozen_variances(1.0, 0.0, 500.0, 0.0, &var_jz, &var_jy) == SQZ_ERROR_DOMAIN);

  double xi = 0.0;
  REQUIRE(sqz_frozen_xi_min(1.0, 100.0, 100.0, &xi) == SQZ_OK);
  CHECK(xi == doctest::Approx(0.4472135954999579).epsilon(1e-14));
  CHECK(sqz_frozen_xi_min(1.0, 0.0, 100.0, &xi) == SQZ_ERROR_DOMAIN);

  double t_star = 0.0;
  REQUIRE(sqz_frozen_optimal_time(1.0, 10.0, 500.0, 0, &t_star) == SQZ_OK);
  CHECK(t_star == doctest::Approx(0.011079543025115702).epsilon(1e-14));

  double asym = 0.0;
  REQUIRE(sqz_frozen_asymptotic_xi(1.0, 10.0, 500.0, &asym) == SQZ_OK);
  CHECK(asym == doctest::Approx(0.07071067811865475).epsilon(1e-14));
}

namespace {

struct CheckTally {
  int n = 0;
  int failed = 0;
};

void tally(const sqz_check_item* item, void* user) {
  auto* t = static_cast<CheckTally*>(user);
  t->n += 1;
  if (!item->passed) t->failed += 1;
}

}  // namespace

TEST_CASE("check suite passes at scale 1 and fails at scale 0") {
  const int64_t spins[] = {1, 2, 20};

  CheckTally good;
  int all_passed = 0;
  REQUIRE(sqz_run_checks(spins, 3, 1.0, &tally, &good, &all_passed) == SQZ_OK);
  CHECK(all_passed == 1);
  CHECK(good.n > 0);
  CHECK(good.failed == 0);

  CheckTally corrupted;
  REQUIRE(sqz_run_checks(spins, 3, 0.0, &tally, &corrupted, &all_passed) == SQZ_OK);
  CHECK(all_passed == 0);
  CHECK(corrupted.failed > 0);

  CHECK(sqz_run_checks(nullptr, 0, 1.0, nullptr, nullptr, &all_passed) ==
        SQZ_ERROR_INVALID_ARGUMENT);
  CHECK(sqz_run_checks(spins, 3, 2.0, nullptr, nullptr, &all_passed) ==
        SQZ_ERROR_INVALID_ARGUMENT);
}
