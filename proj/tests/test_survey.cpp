#include <doctest.h>

#include "starcox/survey.hpp"
#include "support.hpp"

using namespace testing;

TEST_SUITE("survey") {
  TEST_CASE("rows are deterministic across thread counts") {
    SurveyConfig cfg;
    cfg.max_norm = 20;
    cfg.cap = 200'000;
    cfg.threads = 1;
    const auto a = run_survey(cfg);
    cfg.threads = 3;
    const auto b = run_survey(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json_line(a[i]) == to_json_line(b[i]));
    CHECK(summary_json_line(a) == summary_json_line(b));
  }

  TEST_CASE("row contents") {
    SurveyConfig cfg;
    cfg.ks = {6};
    cfg.max_norm = 11;
    cfg.cap = 100'000;
    const auto rows = run_survey(cfg);
    // primes of norm <= 11: 2, sqrt5, 3, and two of norm 11
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].prime == "2");
    CHECK(rows[0].verify_mode == "enumerated");
    CHECK(rows[0].verified_order == 960);
    CHECK_FALSE(rows[0].smooth);
    CHECK(rows[1].label == "O(4,5,-1)");
    CHECK(rows[1].dual_path == true);
    CHECK(rows[2].predicted_order == 174960);
    CHECK(rows[2].verify_mode == "bsgs");
    CHECK(rows[2].verified_order == 174960);
    CHECK(rows[3].q == 11);
    for (const auto& r : rows) {
      CHECK(r.error.empty());
      CHECK(r.order_ok());
      CHECK(r.cgroup.value_or(true));
    }
    const std::string line = to_json_line(rows[0]);
    CHECK(line.rfind(R"({"k":"6","prime":"2","class":"Even","q":4,)", 0) == 0);
  }

  TEST_CASE("over-cap rows are kept and marked") {
    SurveyConfig cfg;
    cfg.ks = {3};
    cfg.max_norm = 11;
    cfg.cap = 5;
    const auto rows = run_survey(cfg);
    REQUIRE(rows.size() == 5);
    for (const auto& r : rows) {
      CHECK(r.verify_mode == "skipped");
      CHECK_FALSE(r.cgroup.has_value());
    }
    CHECK(summary_json_line(rows).find(R"("skipped":5)") != std::string::npos);
  }

  TEST_CASE("k = inf rows cover sqrt5 and 3 only") {
    SurveyConfig cfg;
    cfg.ks = {kInfinity};
    cfg.max_norm = 50;
    const auto rows = run_survey(cfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].prime == "2+1t");
    CHECK(rows[1].prime == "3");
    for (const auto& r : rows) CHECK(r.cgroup == true);
  }
}
