// starcox: reductions of the star Coxeter group [5,3;k] modulo primes of Z[tau].

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "starcox/cgroup.hpp"
#include "starcox/classify.hpp"
#include "starcox/errors.hpp"
#include "starcox/polytope.hpp"
#include "starcox/survey.hpp"

using namespace starcox;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFail = 1, kParse = 2, kComposite = 3, kOverCap = 4 };

struct Options {
  std::string k = "3";
  std::string prime;
  int scale = 1;
  int ring = 2;
  std::optional<std::uint64_t> cap;
  std::uint64_t max_norm = 61;
  std::string out;
  std::string format = "text";
  bool no_cgroup = false;
  unsigned threads = 0;
};

std::uint64_t effective_cap(const Options& o) {
  if (o.cap) return *o.cap;
  if (const char* env = std::getenv("STARCOX_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("bad STARCOX_CAP: ") + env);
    }
  }
  return kDefaultCap;
}

int parse_k(const std::string& s) {
  if (s == "inf") return kInfinity;
  if (s == "3" || s == "4" || s == "5" || s == "6") return std::stoi(s);
  throw ParseError("k must be 3, 4, 5, 6 or inf");
}

std::vector<int> parse_ks(const std::string& s) {
  if (s == "all") return {3, 4, 5, 6};
  return {parse_k(s)};
}

StarParams params_of(const Options& o) {
  if (o.prime.empty()) throw ParseError("--prime is required");
  StarParams p;
  p.k = parse_k(o.k);
  p.prime = classify_prime(parse_golden(o.prime));
  p.scale = o.scale;
  return p;
}

std::string sign(int e) { return e > 0 ? "+1" : e < 0 ? "-1" : "0"; }

int cmd_classify(const Options& o) {
  const StarParams p = params_of(o);
  const Classification c = classify_rank4(p);
  const std::string order = c.predicted_order.str();
  if (o.format == "json") {
    ojson j;
    j["k"] = k_label(p.k);
    j["prime"] = to_string(p.prime.value);
    j["class"] = to_string(p.prime.klass);
    j["q"] = p.prime.q;
    j["scale"] = p.scale;
    j["epsilon"] = c.epsilon;
    j["delta"] = c.delta;
    j["classification"] = c.label();
    j["order"] = order;
    j["smooth"] = c.smooth;
    if (p.prime.is_odd())
      for (int i : {0, 2, 3}) j["G" + std::to_string(i)] = classify_rank3(i, p).label();
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << "prime:          " << to_string(p.prime.value) << '\n'
            << "class:          " << to_string(p.prime.klass) << '\n'
            << "q:              " << p.prime.q << '\n';
  if (p.prime.is_odd())
    std::cout << "epsilon:        " << sign(c.epsilon) << '\n'
              << "delta:          " << sign(c.delta) << '\n';
  std::cout << "smooth:         " << (c.smooth ? "yes" : "no") << '\n'
            << "classification: " << c.label() << ", order " << order << '\n';
  if (p.prime.is_odd())
    for (int i : {0, 2, 3}) {
      const Classification s = classify_rank3(i, p);
      std::cout << "G" << i << ":             " << s.label() << ", order "
                << s.predicted_order.str() << '\n';
    }
  return kOk;
}

int cmd_verify(const Options& o) {
  const StarParams p = params_of(o);
  const IntersectionReport r = verify_cgroup(p, effective_cap(o));
  if (o.format == "json") {
    ojson j;
    j["k"] = k_label(p.k);
    j["prime"] = to_string(p.prime.value);
    j["distinctInvolutions"] = r.distinct_involutions;
    for (int t = 0; t < 3; ++t) j["checks"][kRank3CheckNames[t]] = r.rank3[t];
    for (int t = 0; t < 3; ++t) j["checks"][kRank4CheckNames[t]] = r.rank4[t];
    for (const auto& [name, n] : r.subgroup_orders) j["orders"][name] = n;
    j["witness"] = r.witness ? ojson(*r.witness) : nullptr;
    j["cgroup"] = r.is_cgroup();
    std::cout << j.dump() << '\n';
  } else {
    auto yes = [](bool b) { return b ? "true" : "false"; };
    std::cout << "distinct involutions  " << yes(r.distinct_involutions) << '\n';
    for (int t = 0; t < 3; ++t) std::cout << kRank3CheckNames[t] << "      " << yes(r.rank3[t]) << '\n';
    for (int t = 0; t < 3; ++t) std::cout << kRank4CheckNames[t] << "         " << yes(r.rank4[t]) << '\n';
    std::cout << "orders:";
    for (const auto& [name, n] : r.subgroup_orders) std::cout << ' ' << name << '=' << n;
    std::cout << '\n';
    if (r.witness) std::cout << "witness: " << *r.witness << '\n';
    std::cout << "C-group: " << yes(r.is_cgroup()) << '\n';
  }
  return r.is_cgroup() ? kOk : kFail;
}

int cmd_polytope(const Options& o) {
  const StarParams p = params_of(o);
  const PolytopeStats s = face_counts(p, o.ring, effective_cap(o));
  std::cout << (o.format == "text" ? to_table(s) : to_json(s) + "\n");
  return kOk;
}

int cmd_survey(const Options& o) {
  SurveyConfig cfg;
  cfg.ks = parse_ks(o.k);
  cfg.max_norm = o.max_norm;
  cfg.cap = effective_cap(o);
  cfg.verify_cgroups = !o.no_cgroup;
  cfg.threads = o.threads;
  const auto rows = run_survey(cfg);

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw std::runtime_error("cannot write " + o.out);
  }
  std::ostream& os = o.out.empty() ? std::cout : file;
  for (const auto& r : rows) os << to_json_line(r) << '\n';
  const std::string summary = summary_json_line(rows);
  os << summary << '\n';
  if (!o.out.empty()) std::cout << summary << '\n';

  bool ok = true;
  for (const auto& r : rows)
    ok = ok && r.error.empty() && r.order_ok() && r.dual_path.value_or(true) && r.cgroup.value_or(true);
  return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reductions of the star Coxeter group [5,3;k] modulo primes of Z[tau]"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "3, 4, 5, 6 or inf")->check(CLI::IsMember({"3", "4", "5", "6", "inf"}));
    sub->add_option("--prime", o.prime, "prime of Z[t], e.g. 2, -1+2t, 3+1t")->required();
    sub->add_option("--cap", o.cap, "enumeration cap (env STARCOX_CAP)");
    sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  };

  auto* classify = app.add_subcommand("classify", "type and order of G^p");
  add_common(classify);
  classify->add_option("--scale", o.scale, "Gram scale")->check(CLI::IsMember({1, 2}));

  auto* verify = app.add_subcommand("verify", "C-group intersection checks");
  add_common(verify);

  auto* polytope = app.add_subcommand("polytope", "face counts of the semiregular 4-polytope");
  add_common(polytope);
  polytope->add_option("--ring", o.ring)->check(CLI::IsMember({0, 2}));

  auto* survey = app.add_subcommand("survey", "classify and verify every prime up to a norm bound");
  survey->add_option("--k", o.k, "3, 4, 5, 6, inf or all")
      ->check(CLI::IsMember({"3", "4", "5", "6", "inf", "all"}));
  survey->add_option("--max-norm", o.max_norm)->check(CLI::Range(2, 100000));
  survey->add_option("--out", o.out, "JSON-lines output file");
  survey->add_option("--cap", o.cap, "enumeration cap (env STARCOX_CAP)");
  survey->add_option("--threads", o.threads);
  survey->add_flag("--no-cgroup", o.no_cgroup, "skip C-group verification");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*verify) return cmd_verify(o);
    if (*polytope) {
      if (polytope->count("--format") == 0) o.format = "json";
      return cmd_polytope(o);
    }
    return cmd_survey(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const CompositeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kComposite;
  } catch (const UnitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kComposite;
  } catch (const OverCapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOverCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
