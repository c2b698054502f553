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

// Text forms.
//
//   field spec   p=<int>[,n=<int>][,mod=<c0,c1,...,1>]   (mod must come last)
//   element      integer (embedded mod p) or c0:c1:...:c_{n-1}
//   Poly         {"field": "<spec>", "coeffs": [c0, c1, ...]}
//   Chain        {"field": "<spec>", "a": [a0, a1, ...]}
//   Sequence     {"field": "<spec>", "terms": [...]}
//
// In JSON an extension-field element is a length-n integer array (low to
// high); a prime-field element is a bare integer.

#ifndef FFPERM_IO_HPP_
#define FFPERM_IO_HPP_

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ffperm/carlitz.hpp"
#include "ffperm/counting.hpp"
#include "ffperm/error.hpp"
#include "ffperm/gf.hpp"
#include "ffperm/lincomp.hpp"
#include "ffperm/poly.hpp"
#include "ffperm/sweep.hpp"

namespace ffperm {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::size_t used = 0;
  const std::string str(s);
  std::int64_t v = 0;
  try {
    v = std::stoll(str, &used);
  } catch (const std::exception&) {
    throw Error(Errc::kParse, "bad integer for " + std::string(what) + ": '" + str + "'");
  }
  if (used != str.size()) throw Error(Errc::kParse, "bad integer for " + std::string(what) + ": '" + str + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace detail

inline FieldCtx parse_field_spec(std::string_view spec) {
  std::optional<std::int64_t> p, n;
  std::optional<std::vector<std::uint32_t>> mod;
  std::string_view head = spec;
  if (const auto pos = spec.find("mod="); pos != std::string_view::npos) {
    head = spec.substr(0, pos);
    std::vector<std::uint32_t> coeffs;
    for (auto tok : detail::split(spec.substr(pos + 4), ',')) {
      const std::int64_t c = detail::parse_int(tok, "mod coefficient");
      if (c < 0) throw Error(Errc::kParse, "mod coefficients must be non-negative");
      coeffs.push_back(static_cast<std::uint32_t>(c));
    }
    if (coeffs.empty() || coeffs.back() != 1) throw Error(Errc::kParse, "mod must end with the leading 1");
    mod = std::move(coeffs);
  }
  for (auto tok : detail::split(head, ',')) {
    if (tok.empty()) continue;
    if (tok.starts_with("p=")) p = detail::parse_int(tok.substr(2), "p");
    else if (tok.starts_with("n=")) n = detail::parse_int(tok.substr(2), "n");
    else throw Error(Errc::kParse, "unknown field spec item '" + std::string(tok) + "'");
  }
  if (!p) throw Error(Errc::kParse, "field spec needs p=<prime>");
  if (*p < 2) throw Error(Errc::kCompositeP, std::to_string(*p) + " is not prime");
  if (!n) n = mod ? static_cast<std::int64_t>(mod->size()) - 1 : 1;
  if (*n < 1) throw Error(Errc::kBadRange, "n must be >= 1");
  return make_field(static_cast<std::uint64_t>(*p), static_cast<std::uint64_t>(*n), std::move(mod));
}

inline std::string format_field_spec(const FieldCtx& F) {
  std::ostringstream os;
  os << "p=" << F.p();
  if (F.n() > 1) {
    os << ",n=" << F.n() << ",mod=";
    for (std::size_t i = 0; i < F.modulus().size(); ++i) os << (i ? "," : "") << F.modulus()[i];
  }
  return os.str();
}

inline Fe parse_element(const FieldCtx& F, std::string_view text) {
  if (text.find(':') == std::string_view::npos) return F.embed(detail::parse_int(text, "element"));
  std::vector<std::int64_t> c;
  for (auto tok : detail::split(text, ':')) c.push_back(detail::parse_int(tok, "element coefficient"));
  return F.from_coeffs(c);
}

inline std::vector<Fe> parse_element_list(const FieldCtx& F, std::string_view text) {
  std::vector<Fe> out;
  for (auto tok : detail::split(text, ',')) out.push_back(parse_element(F, tok));
  return out;
}

inline std::string format_element(const FieldCtx& F, Fe a) {
  if (F.is_prime_field()) return std::to_string(a.v);
  std::string s;
  const auto c = F.coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ":" : "") + std::to_string(c[i]);
  return s;
}

inline Json element_to_json(const FieldCtx& F, Fe a) {
  if (F.is_prime_field()) return a.v;
  return F.coeffs(a);
}

inline Fe element_from_json(const FieldCtx& F, const Json& j) {
  if (j.is_number_integer()) return F.embed(j.get<std::int64_t>());
  if (j.is_array()) return F.from_coeffs(j.get<std::vector<std::int64_t>>());
  if (j.is_string()) return parse_element(F, j.get<std::string>());
  throw Error(Errc::kParse, "element must be an integer, an array or a string");
}

inline Json elements_to_json(const FieldCtx& F, std::span<const Fe> v) {
  Json arr = Json::array();
  for (Fe a : v) arr.push_back(element_to_json(F, a));
  return arr;
}

inline Json poly_to_json(const Poly& f) {
  Json j;
  j["field"] = format_field_spec(f.field());
  j["coeffs"] = elements_to_json(f.field(), f.coeffs());
  return j;
}

inline Poly poly_from_json(const Json& j) {
  if (!j.contains("field") || !j.contains("coeffs")) throw Error(Errc::kParse, "poly JSON needs field and coeffs");
  const FieldCtx F = parse_field_spec(j.at("field").get<std::string>());
  std::vector<Fe> c;
  for (const auto& e : j.at("coeffs")) c.push_back(element_from_json(F, e));
  return Poly(F, std::move(c));
}

inline Json chain_to_json(const Chain& ch) {
  Json j;
  j["field"] = format_field_spec(ch.field());
  j["a"] = elements_to_json(ch.field(), ch.params());
  return j;
}

inline Chain chain_from_json(const Json& j) {
  if (!j.contains("field") || !j.contains("a")) throw Error(Errc::kParse, "chain JSON needs field and a");
  const FieldCtx F = parse_field_spec(j.at("field").get<std::string>());
  std::vector<Fe> a;
  for (const auto& e : j.at("a")) a.push_back(element_from_json(F, e));
  return Chain(F, std::move(a));
}

inline Json sequence_to_json(const Sequence& s) {
  Json j;
  j["field"] = format_field_spec(s.field);
  j["terms"] = elements_to_json(s.field, s.terms);
  return j;
}

inline Json rank_report_to_json(const RankReport& r) {
  Json j;
  j["rank"] = std::string(to_string(r.rank));
  j["witness"] = r.witness ? chain_to_json(*r.witness) : Json(nullptr);
  return j;
}

inline Json surd_to_json(const Surd& s) {
  Json j;
  j["value"] = s.to_double();
  j["exact"] = s.str();
  return j;
}

inline Json nu_row_to_json(const NuRow& r) {
  Json j;
  j["p"] = r.p;
  j["nu"] = r.nu;
  j["argmax"] = r.argmax;
  j["bound"] = surd_to_json(r.bound);
  j["within_bound"] = r.within_bound();
  j["ratio_log"] = r.ratio_log;
  return j;
}

inline std::string nu_csv_header() { return "p,nu,argmax_list,bound_num,bound_formula,ratio_log"; }

inline std::string nu_row_to_csv(const NuRow& r) {
  std::ostringstream os;
  os << r.p << ',' << r.nu << ',';
  for (std::size_t i = 0; i < r.argmax.size(); ++i) os << (i ? ";" : "") << r.argmax[i];
  os.setf(std::ios::fixed);
  os.precision(6);
  os << ',' << r.bound.to_double() << ',' << r.bound.str() << ',' << r.ratio_log;
  return os.str();
}

inline std::string sweep_csv_header() { return "q,p,case,min_weight,bound_thm33,bound_cor35,violations"; }

/// One CSV row per case (a, b, c) and one for all cases.
inline std::vector<std::string> sweep_rank2_csv_rows(const Rank2SweepResult& r) {
  std::vector<std::string> rows;
  auto row = [&](std::string_view name, const Rank2CaseStats& s) {
    std::ostringstream os;
    os << r.q << ',' << r.p << ',' << name << ',';
    if (s.min_weight) os << *s.min_weight;
    os.setf(std::ios::fixed);
    os.precision(6);
    os << ',' << r.bound_thm.to_double() << ',' << r.bound_cor << ',' << s.violations;
    rows.push_back(os.str());
  };
  row("a", r.cases[0]);
  row("b", r.cases[1]);
  row("c", r.cases[2]);
  row("all", r.overall);
  return rows;
}

inline Json counterexample_to_json(const FieldCtx& F, const Counterexample& c) {
  Json j;
  j["chain"] = elements_to_json(F, c.chain);
  j["reason"] = c.reason;
  j["observed"] = c.observed;
  j["expected"] = c.expected;
  return j;
}

inline Json sweep_rank2_to_json(const FieldCtx& F, const Rank2SweepResult& r) {
  Json j;
  j["q"] = r.q;
  j["p"] = r.p;
  j["nu_p"] = r.nu_p;
  j["bound_general"] = surd_to_json(r.bound_thm);
  j["bound_sharp"] = r.bound_cor;
  Json cases = Json::object();
  auto stats = [](const Rank2CaseStats& s) {
    Json c;
    c["chains"] = s.chains;
    c["exact_rank2"] = s.exact_rank2;
    c["min_weight"] = s.min_weight ? Json(*s.min_weight) : Json(nullptr);
    c["violations"] = s.violations;
    return c;
  };
  cases["a"] = stats(r.cases[0]);
  cases["b"] = stats(r.cases[1]);
  cases["c"] = stats(r.cases[2]);
  cases["all"] = stats(r.overall);
  j["cases"] = cases;
  j["case_a_mismatches"] = r.case_a_mismatches;
  j["case_b_mismatches"] = r.case_b_mismatches;
  j["linchpin_mismatches"] = r.linchpin_mismatches;
  j["cor_violations"] = r.cor_violations;
  j["got_checked"] = r.got_checked;
  j["got_violations"] = r.got_violations;
  j["degree_violations"] = r.degree_violations;
  j["below_general_bound"] = r.thm_flags;
  Json ce = Json::array();
  for (const auto& c : r.counterexamples) ce.push_back(counterexample_to_json(F, c));
  j["counterexamples"] = ce;
  return j;
}

}  // namespace ffperm

#endif  // FFPERM_IO_HPP_
