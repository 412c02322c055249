#include "starcox/survey.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <json.hpp>

#include "starcox/cgroup.hpp"
#include "starcox/classify.hpp"
#include "starcox/errors.hpp"
#include "starcox/star.hpp"

namespace starcox {

bool SurveyRow::order_ok() const {
  return !predicted_order || !verified_order || *predicted_order == *verified_order;
}

SurveyRow survey_row(int k, const GoldenPrime& p, const SurveyConfig& cfg) {
  SurveyRow row;
  row.k = k;
  row.prime = to_string(p.value);
  row.klass = to_string(p.klass);
  row.q = p.q;
  row.verify_mode = "skipped";
  const StarParams params{k, p, 1};
  try {
    if (k == kInfinity) {
      row.label = "unclassified";
    } else {
      const Classification c = classify_rank4(params);
      row.label = c.label();
      row.predicted_order = static_cast<std::uint64_t>(c.predicted_order);
      if (p.is_odd()) row.dual_path = same_type(c, table3_lookup(params));
    }
    const ReducedGenerators rg = reduced_generators(params);
    row.smooth = rg.smooth;
    std::vector<Mat4> gens(rg.gens.begin(), rg.gens.end());

    if (cfg.verify_orders) {
      const std::uint64_t hint = row.predicted_order.value_or(0);
      try {
        if (hint <= cfg.cap) {
          row.verified_order = enumerate(rg.field, gens, cfg.cap, hint).order();
          row.verify_mode = "enumerated";
        } else {
          row.verified_order = bsgs(rg.field, gens, cfg.cap).order();
          row.verify_mode = "bsgs";
        }
      } catch (const OverCapError&) {
        row.verify_mode = "skipped";
      } catch (const std::out_of_range&) {
        row.verify_mode = "skipped";
      }
    }
    if (cfg.verify_cgroups) {
      try {
        row.cgroup = verify_cgroup(rg.field, rg.gens, cfg.cap).is_cgroup();
      } catch (const OverCapError&) {
      }
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<SurveyRow> run_survey(const SurveyConfig& cfg) {
  std::vector<std::pair<int, GoldenPrime>> jobs;
  const auto primes = primes_up_to_norm(cfg.max_norm);
  for (int k : cfg.ks)
    for (const GoldenPrime& p : primes) {
      if (k == kInfinity && p.klass != PrimeClass::ClassI && !p.is_associate_of_three()) continue;
      jobs.emplace_back(k, p);
    }

  std::vector<SurveyRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++)
      rows[i] = survey_row(jobs[i].first, jobs[i].second, cfg);
  };
  unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(1, jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string to_json_line(const SurveyRow& row) {
  nlohmann::ordered_json j;
  j["k"] = k_label(row.k);
  j["prime"] = row.prime;
  j["class"] = row.klass;
  j["q"] = row.q;
  j["classification"] = row.label;
  j["predictedOrder"] = row.predicted_order ? nlohmann::ordered_json(*row.predicted_order) : nullptr;
  j["verifyMode"] = row.verify_mode;
  j["verifiedOrder"] = row.verified_order ? nlohmann::ordered_json(*row.verified_order) : nullptr;
  j["cgroup"] = row.cgroup ? nlohmann::ordered_json(*row.cgroup) : nullptr;
  j["smooth"] = row.smooth;
  j["dualPath"] = row.dual_path ? nlohmann::ordered_json(*row.dual_path) : nullptr;
  if (!row.error.empty()) j["error"] = row.error;
  return j.dump();
}

std::string summary_json_line(const std::vector<SurveyRow>& rows) {
  std::size_t enumerated = 0, via_bsgs = 0, skipped = 0, order_mismatch = 0, cg_pass = 0,
              cg_fail = 0, cg_skipped = 0, disagree = 0, errors = 0;
  for (const auto& r : rows) {
    enumerated += r.verify_mode == "enumerated";
    via_bsgs += r.verify_mode == "bsgs";
    skipped += r.verify_mode == "skipped";
    order_mismatch += !r.order_ok();
    if (!r.cgroup)
      ++cg_skipped;
    else if (*r.cgroup)
      ++cg_pass;
    else
      ++cg_fail;
    disagree += r.dual_path && !*r.dual_path;
    errors += !r.error.empty();
  }
  nlohmann::ordered_json s;
  s["rows"] = rows.size();
  s["enumerated"] = enumerated;
  s["bsgs"] = via_bsgs;
  s["skipped"] = skipped;
  s["orderMismatches"] = order_mismatch;
  s["cgroupPass"] = cg_pass;
  s["cgroupFail"] = cg_fail;
  s["cgroupSkipped"] = cg_skipped;
  s["dualPathDisagreements"] = disagree;
  s["errors"] = errors;
  nlohmann::ordered_json j;
  j["summary"] = s;
  return j.dump();
}

}  // namespace starcox
