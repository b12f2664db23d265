#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "chainmetric/errors.hpp"
#include "chainmetric/verify.hpp"

using namespace chainmetric;

namespace {

SweepConfig light() {
  SweepConfig cfg;
  cfg.random_weights = 3;
  cfg.heavy_random_weights = 2;
  cfg.random_codes = 25;
  return cfg;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("the check registry is consistent") {
  std::vector<std::string> ids = check_ids();
  REQUIRE_FALSE(ids.empty());
  CHECK(std::find(ids.begin(), ids.end(), "ball-size-formula") != ids.end());
  for (unsigned criterion = 1; criterion <= 10; ++criterion) {
    std::vector<std::string> behind = criterion_checks(criterion);
    REQUIRE_FALSE(behind.empty());
    for (const std::string& id : behind)
      CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  }
  std::vector<std::string> collision = criterion_checks(6);
  CHECK(std::find(collision.begin(), collision.end(), "packing-radius-collision") !=
        collision.end());
}

TEST_CASE("unknown check ids are rejected") {
  CHECK_THROWS_AS(run_check("no-such-check", light()), DomainError);
}

TEST_CASE("formula checks pass under a light sweep") {
  for (const char* id : {"ball-size-formula", "naive-weight-regression", "singleton-bound"}) {
    CheckResult r = run_check(id, light());
    CAPTURE(id);
    CAPTURE(r.detail);
    CHECK(r.status == CheckStatus::passed);
    CHECK(r.cases > 0);
  }
}

TEST_CASE("results are deterministic for a fixed configuration") {
  SweepConfig cfg = light();
  CheckResult a = run_check("translation-product-bound", cfg);
  CheckResult b = run_check("translation-product-bound", cfg);
  CHECK(a.status == b.status);
  CHECK(a.cases == b.cases);
  CHECK(a.detail == b.detail);
  cfg.seed = 77;
  CheckResult c = run_check("translation-product-bound", cfg);
  CHECK(c.status == CheckStatus::passed);
}

TEST_CASE("status names render for reports") {
  CHECK(to_string(CheckStatus::passed) == "passed");
  CHECK(to_string(CheckStatus::failed) == "failed");
  CHECK(to_string(CheckStatus::skipped) == "skipped");
}

}
