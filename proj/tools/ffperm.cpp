// Copyright 2026 The ffperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ffperm: command-line front end.
//
// Exit status: 0 = success, 1 = a verification failed (the counterexample is
// printed as JSON), 2 = usage or input error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffperm/acceptance.hpp"
#include "ffperm/carlitz.hpp"
#include "ffperm/counting.hpp"
#include "ffperm/error.hpp"
#include "ffperm/gf.hpp"
#include "ffperm/io.hpp"
#include "ffperm/lincomp.hpp"
#include "ffperm/poly.hpp"
#include "ffperm/sweep.hpp"

namespace {

using ffperm::Json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Config {
  std::string field;
  std::uint32_t p = 0;
  std::uint32_t n = 1;
  std::string chain;
  std::string poly;
  std::string range;
  unsigned jobs = 1;
  std::string format = "json";
  std::uint32_t cap = ffperm::kDefaultQCap;
  std::uint64_t seed = 20260417;
  // count-window / count-full / bounds
  std::string gamma;
  std::string c;
  std::string d = "0";
  std::int64_t L = 0;
  std::int64_t M = 3;
  std::int64_t weight = -1;
  std::int64_t rank = 2;
  // sweep-rank2 / blahut
  bool all = false;
  bool no_fold = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

void emit_meta(const std::string& command, const Config& cfg) {
  Json m;
  m["command"] = command;
  m["seed"] = cfg.seed;
  Json j;
  j["meta"] = m;
  emit(j);
}

ffperm::FieldCtx field_from(const Config& cfg) {
  if (!cfg.field.empty()) return ffperm::parse_field_spec(cfg.field);
  if (cfg.p != 0) return ffperm::make_field(cfg.p, cfg.n);
  throw UsageError("--field (or --p) is required");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--poly: cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ffperm::Poly poly_from(const Config& cfg) {
  if (cfg.poly.empty()) throw UsageError("--poly is required");
  const std::string text = cfg.poly.front() == '{' ? cfg.poly : slurp(cfg.poly);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("--poly: ") + e.what());
  }
  return ffperm::poly_from_json(j);
}

ffperm::Chain chain_from(const Config& cfg, const ffperm::FieldCtx& F) {
  if (cfg.chain.empty()) throw UsageError("--chain is required");
  return ffperm::Chain(F, ffperm::parse_element_list(F, cfg.chain));
}

ffperm::Fe element_flag(const ffperm::FieldCtx& F, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return ffperm::parse_element(F, text);
}

int fail_with(const Json& report, const std::vector<Json>& counterexamples) {
  emit(report);
  for (const Json& c : counterexamples) {
    Json j;
    j["counterexample"] = c;
    emit(j);
  }
  return kVerifyFailed;
}

int cmd_field_info(const Config& cfg) {
  const ffperm::FieldCtx F = field_from(cfg);
  Json j;
  j["field"] = ffperm::format_field_spec(F);
  j["p"] = F.p();
  j["n"] = F.n();
  j["q"] = F.q();
  j["modulus"] = F.modulus();
  j["primitive"] = ffperm::element_to_json(F, F.primitive());
  emit(j);
  return kOk;
}

int cmd_expand(const Config& cfg) {
  const ffperm::FieldCtx F = field_from(cfg);
  if (F.q() > cfg.cap) throw ffperm::Error(ffperm::Errc::kFieldTooLarge, "q exceeds --cap");
  const ffperm::Chain ch = chain_from(cfg, F);
  const ffperm::Poly f = ffperm::expand_chain(ch);
  Json j = ffperm::poly_to_json(f);
  j["weight"] = f.weight();
  j["chain"] = ffperm::chain_to_json(ch);
  emit(j);
  return kOk;
}

int cmd_rank2_coeffs(const Config& cfg) {
  const ffperm::FieldCtx F = field_from(cfg);
  const auto a = ffperm::parse_element_list(F, cfg.chain);
  if (a.size() != 4) throw UsageError("--chain needs exactly a0,a1,a2,a3");
  const ffperm::Poly f = ffperm::rank2_coeffs(F, a[0], a[1], a[2], a[3]);
  Json j = ffperm::poly_to_json(f);
  j["weight"] = f.weight();
  emit(j);
  return kOk;
}

int cmd_rank(const Config& cfg) {
  const ffperm::Poly f = poly_from(cfg);
  emit(ffperm::rank_report_to_json(ffperm::rank_upto2(f, cfg.cap)));
  return kOk;
}

int cmd_weight(const Config& cfg) {
  const ffperm::Poly f = poly_from(cfg);
  Json j;
  j["weight"] = f.weight();
  emit(j);
  return kOk;
}

int cmd_nu_p(const Config& cfg) {
  if (cfg.p == 0) throw UsageError("--p is required");
  const ffperm::NuRow row = ffperm::nu_p(cfg.p, cfg.jobs);
  if (cfg.format == "csv") {
    std::cout << ffperm::nu_csv_header() << '\n' << ffperm::nu_row_to_csv(row) << '\n';
  } else {
    emit_meta("nu-p", cfg);
    emit(ffperm::nu_row_to_json(row));
  }
  return row.within_bound() ? kOk : kVerifyFailed;
}

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--range must be pmin:pmax");
  try {
    return {static_cast<std::uint32_t>(std::stoul(text.substr(0, colon))),
            static_cast<std::uint32_t>(std::stoul(text.substr(colon + 1)))};
  } catch (const std::exception&) {
    throw UsageError("--range must be pmin:pmax");
  }
}

int cmd_scan_nu(const Config& cfg) {
  if (cfg.range.empty()) throw UsageError("--range is required");
  const auto [lo, hi] = parse_range(cfg.range);
  const ffperm::ScanReport rep = ffperm::conjecture_scan(lo, hi, cfg.jobs);
  if (cfg.format == "csv") {
    std::cout << ffperm::nu_csv_header() << '\n';
    for (const auto& r : rep.rows) std::cout << ffperm::nu_row_to_csv(r) << '\n';
  } else {
    emit_meta("scan-nu", cfg);
    for (const auto& r : rep.rows) emit(ffperm::nu_row_to_json(r));
    Json s;
    s["primes"] = rep.rows.size();
    s["max_ratio_log"] = rep.max_ratio_log;
    s["max_ratio_p"] = rep.max_ratio_p;
    s["violations"] = rep.violations;
    Json j;
    j["summary"] = s;
    emit(j);
  }
  return rep.violations.empty() ? kOk : kVerifyFailed;
}

int cmd_count_window(const Config& cfg) {
  const ffperm::FieldCtx F = field_from(cfg);
  const ffperm::CountQuery qr{F, element_flag(F, cfg.gamma, "--gamma"), element_flag(F, cfg.c, "--c"),
                              element_flag(F, cfg.d, "--d"), cfg.L, cfg.M};
  const std::uint64_t n = ffperm::count_exp_linear(qr);
  Json j;
  j["count"] = n;
  if (cfg.M >= 3 && F.is_prime_field()) {
    const ffperm::Surd b = ffperm::lemma_window_bound(cfg.M);
    j["bound"] = ffperm::surd_to_json(b);
    j["within_bound"] = (b <=> ffperm::Rational(static_cast<std::int64_t>(n))) >= 0;
    emit(j);
    return j["within_bound"].get<bool>() ? kOk : kVerifyFailed;
  }
  emit(j);
  return kOk;
}

int cmd_count_full(const Config& cfg) {
  const ffperm::FieldCtx F = field_from(cfg);
  const std::uint64_t n = ffperm::count_full(F, element_flag(F, cfg.gamma, "--gamma"));
  const ffperm::Surd b = ffperm::full_range_bound(F);
  Json j;
  j["count"] = n;
  j["bound"] = ffperm::surd_to_json(b);
  j["within_bound"] = (b <=> ffperm::Rational(static_cast<std::int64_t>(n))) >= 0;
  emit(j);
  return j["within_bound"].get<bool>() ? kOk : kVerifyFailed;
}

int cmd_bounds(const Config& cfg) {
  const ffperm::FieldCtx F = field_from(cfg);
  Json j;
  j["field"] = ffperm::format_field_spec(F);
  if (F.p() % 2 == 1) {
    const std::uint32_t nu = ffperm::nu_p(F.p(), cfg.jobs).nu;
    j["nu_p"] = nu;
    j["rank2_weight_general"] = ffperm::surd_to_json(ffperm::thm_rank2_bound(F));
    j["rank2_weight_sharp"] = ffperm::cor_rank2_bound(F, nu);
    j["full_range_count"] = ffperm::surd_to_json(ffperm::full_range_bound(F));
  }
  if (cfg.weight >= 0) {
    const ffperm::GotBounds g = ffperm::got_bounds(cfg.weight, F.q(), cfg.rank);
    Json gj;
    gj["crk_lower"] = g.crk_lower.str();
    gj["weight_lower"] = g.weight_lower.str();
    j["prior"] = gj;
  }
  emit(j);
  return kOk;
}

int cmd_sweep_rank1(const Config& cfg) {
  const ffperm::FieldCtx F = field_from(cfg);
  if (F.q() > cfg.cap) throw ffperm::Error(ffperm::Errc::kFieldTooLarge, "q exceeds --cap");
  const ffperm::Rank1SweepResult r = ffperm::sweep_rank1(F, true);
  Json j;
  j["q"] = r.q;
  j["instances"] = r.instances;
  j["outside_set"] = r.outside_set;
  j["mismatches"] = r.mismatches;
  j["expansion_mismatches"] = r.expansion_mismatches;
  if (r.counterexamples.empty()) {
    emit(j);
    return kOk;
  }
  std::vector<Json> ce;
  for (const auto& c : r.counterexamples) ce.push_back(ffperm::counterexample_to_json(F, c));
  return fail_with(j, ce);
}

int cmd_sweep_rank2(const Config& cfg) {
  const ffperm::FieldCtx F = field_from(cfg);
  if (F.q() > cfg.cap) throw ffperm::Error(ffperm::Errc::kFieldTooLarge, "q exceeds --cap");
  const ffperm::Rank2SweepResult r = ffperm::sweep_rank2(F, {!cfg.all, cfg.jobs});
  if (cfg.format == "csv") {
    std::cout << ffperm::sweep_csv_header() << '\n';
    for (const auto& row : ffperm::sweep_rank2_csv_rows(r)) std::cout << row << '\n';
    if (r.violations() == 0) return kOk;
    for (const auto& c : r.counterexamples) {
      Json j;
      j["counterexample"] = ffperm::counterexample_to_json(F, c);
      std::cerr << j.dump() << '\n';
    }
    return kVerifyFailed;
  }
  emit_meta("sweep-rank2", cfg);
  Json j = ffperm::sweep_rank2_to_json(F, r);
  emit(j);
  return r.violations() == 0 ? kOk : kVerifyFailed;
}

int cmd_blahut(const Config& cfg) {
  const ffperm::Poly f = poly_from(cfg);
  const ffperm::BlahutReport r = ffperm::blahut_check(f, !cfg.no_fold, cfg.cap);
  Json j;
  j["lc"] = r.lc;
  j["weight"] = r.weight;
  j["equal"] = r.equal;
  if (r.equal) {
    emit(j);
    return kOk;
  }
  return fail_with(j, {ffperm::poly_to_json(f)});
}

int cmd_example(const Config& cfg) {
  const ffperm::Poly f = ffperm::example_fn(cfg.n);
  Json j = ffperm::poly_to_json(f);
  j["weight"] = f.weight();
  j["permutation"] = ffperm::is_permutation(f);
  if (cfg.n == 1) {
    j["rank"] = ffperm::rank_report_to_json(ffperm::rank_upto2(f, cfg.cap));
    j["matches_chain"] = ffperm::expand_chain(ffperm::example_fn_chain(1)) == f;
  }
  emit(j);
  return kOk;
}

int cmd_selftest(const Config& cfg) {
  ffperm::acceptance::Options opt;
  opt.seed = cfg.seed;
  opt.jobs = cfg.jobs;
  ffperm::acceptance::Runner runner(opt);
  const auto results = runner.run_all(std::cout);
  for (const auto& r : results) {
    if (!r.pass) return kVerifyFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Carlitz-rank permutation polynomials: weights, bounds and counts"};
  app.require_subcommand(1);
  Config cfg;

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "field spec, e.g. p=5 or p=3,n=2,mod=1,0,1");
    sub->add_option("--p", cfg.p, "characteristic (when --field is absent)");
    sub->add_option("--n", cfg.n, "extension degree (when --field is absent)");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--cap", cfg.cap, "largest q accepted by exhaustive operations")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for randomized suites");
  };

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const Config&);
  };
  const Sub subs[] = {
      {"field-info", "field parameters and the primitive element", cmd_field_info},
      {"expand", "expand a chain into a reduced polynomial", cmd_expand},
      {"rank2-coeffs", "closed-form coefficients of a length-2 chain", cmd_rank2_coeffs},
      {"rank", "Carlitz rank up to 2 with a witness chain", cmd_rank},
      {"weight", "number of nonzero coefficients", cmd_weight},
      {"nu-p", "nu_p with the argmax set", cmd_nu_p},
      {"scan-nu", "nu_p over a prime range", cmd_scan_nu},
      {"count-window", "solutions of gamma^{i+1} = ic + d in a window", cmd_count_window},
      {"count-full", "full-range count for gamma", cmd_count_full},
      {"bounds", "weight and count bounds for a field", cmd_bounds},
      {"sweep-rank1", "exhaustive rank-1 weight sweep", cmd_sweep_rank1},
      {"sweep-rank2", "exhaustive rank-2 weight sweep", cmd_sweep_rank2},
      {"blahut", "linear complexity against weight", cmd_blahut},
      {"example-f11", "the f_n family over F_{11^n}", cmd_example},
      {"selftest", "run the acceptance suite", cmd_selftest},
  };
  std::vector<std::pair<CLI::App*, int (*)(const Config&)>> registered;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_field(sub);
    add_common(sub);
    registered.emplace_back(sub, s.run);
  }
  auto find = [&](std::string_view name) { return app.get_subcommand(std::string(name)); };
  for (const char* name : {"expand", "rank2-coeffs"}) {
    find(name)->add_option("--chain", cfg.chain, "a0,a1,... (elements as integers or c0:c1:...)");
  }
  for (const char* name : {"rank", "weight", "blahut"}) {
    find(name)->add_option("--poly", cfg.poly, "polynomial JSON, inline or a file path");
  }
  find("scan-nu")->add_option("--range", cfg.range, "pmin:pmax");
  for (const char* name : {"count-window", "count-full"}) {
    find(name)->add_option("--gamma", cfg.gamma, "gamma");
  }
  find("count-window")->add_option("--c", cfg.c, "c (nonzero)");
  find("count-window")->add_option("--d", cfg.d, "d");
  find("count-window")->add_option("--L", cfg.L, "window start");
  find("count-window")->add_option("--M", cfg.M, "window length");
  find("bounds")->add_option("--weight", cfg.weight, "weight for the prior bounds");
  find("bounds")->add_option("--rank", cfg.rank, "Carlitz rank for the prior bounds");
  find("sweep-rank2")->add_flag("--all", cfg.all, "all chains instead of the normalized family");
  find("blahut")->add_flag("--no-fold", cfg.no_fold, "compare against the unfolded weight");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    for (const auto& [sub, run] : registered) {
      if (sub->parsed()) return run(cfg);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ffperm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
