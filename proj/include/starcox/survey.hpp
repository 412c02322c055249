#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starcox/golden.hpp"
#include "starcox/group.hpp"

namespace starcox {

struct SurveyRow {
  int k = 3;
  std::string prime;
  std::string klass;
  std::uint64_t q = 0;
  std::string label;
  std::optional<std::uint64_t> predicted_order;
  std::string verify_mode;  // "enumerated", "bsgs" or "skipped"
  std::optional<std::uint64_t> verified_order;
  std::optional<bool> cgroup;      // empty when a subgroup exceeded the cap
  bool smooth = true;
  std::optional<bool> dual_path;   // classify_rank4 vs table lookup; odd primes only
  std::string error;

  bool order_ok() const;
};

struct SurveyConfig {
  std::vector<int> ks{3, 4, 5, 6};
  std::uint64_t max_norm = 61;
  std::uint64_t cap = kDefaultCap;
  bool verify_orders = true;
  bool verify_cgroups = true;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Rows ordered by (k, q, c, d) independent of thread scheduling.
std::vector<SurveyRow> run_survey(const SurveyConfig& cfg);
SurveyRow survey_row(int k, const GoldenPrime& p, const SurveyConfig& cfg);

std::string to_json_line(const SurveyRow& row);
std::string summary_json_line(const std::vector<SurveyRow>& rows);

}  // namespace starcox
