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

// The acceptance suite: thirteen numbered checks, each printed as one line.
// Shared by the acceptance test binary and `ffperm selftest`.

#ifndef FFPERM_ACCEPTANCE_HPP_
#define FFPERM_ACCEPTANCE_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ffperm/carlitz.hpp"
#include "ffperm/counting.hpp"
#include "ffperm/exact.hpp"
#include "ffperm/gf.hpp"
#include "ffperm/io.hpp"
#include "ffperm/lincomp.hpp"
#include "ffperm/poly.hpp"
#include "ffperm/sweep.hpp"

namespace ffperm::acceptance {

struct Options {
  std::uint64_t seed = 20260417;
  unsigned jobs = 0;                 // 0 = hardware concurrency
  std::uint32_t nu_pmax = 10000;
  std::string scan_csv;              // where to write the nu_p table; empty = skip
};

struct Result {
  int id = 0;
  bool pass = false;
  std::string title;
  std::string detail;
  double seconds = 0.0;
};

// Time limits. "Seconds" criteria get 60 s, "minutes" ones 600 s.
inline constexpr double kLimitAc1 = 1e-3;
inline constexpr double kLimitSeconds = 60.0;
inline constexpr double kLimitMinutes = 600.0;

inline const std::vector<std::uint32_t>& rank2_sweep_qs() {
  static const std::vector<std::uint32_t> qs{5, 7, 9, 11, 13, 25, 27, 49, 121};
  return qs;
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline FieldCtx field_of_order(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint32_t n = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
      r /= p;
      ++n;
    }
    if (r != 1) break;
    return make_field(p, n);
  }
  throw Error(Errc::kBadParam, std::to_string(q) + " is not a prime power");
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? std::string(sep) : "") + parts[i];
  return out;
}

}  // namespace detail

class Runner {
 public:
  explicit Runner(Options opt) : opt_(std::move(opt)) {}

  const Options& options() const { return opt_; }

  Result ac01() {
    Result r{1, false, "nu_11 = 3 with gamma = 7 in argmax, < 1 ms", "", 0};
    // Best of five to keep scheduler noise out of a sub-millisecond figure.
    double best = 1e9;
    NuRow row;
    for (int rep = 0; rep < 5; ++rep) {
      const auto t0 = detail::Clock::now();
      row = nu_p(11, 1);
      best = std::min(best, detail::since(t0));
    }
    const bool has7 = std::find(row.argmax.begin(), row.argmax.end(), 7u) != row.argmax.end();
    r.seconds = best;
    r.pass = row.nu == 3 && has7 && best < kLimitAc1;
    std::ostringstream os;
    os << "nu=" << row.nu << " argmax=[";
    for (std::size_t i = 0; i < row.argmax.size(); ++i) os << (i ? "," : "") << row.argmax[i];
    os << "]";
    r.detail = os.str();
    return r;
  }

  Result ac02() {
    Result r{2, false, "nu_p within sqrt(3p/2 - 39/16) + 5/4 for odd p <= " + std::to_string(opt_.nu_pmax), "", 0};
    const ScanReport& s = scan();
    r.seconds = scan_seconds_;
    r.pass = s.violations.empty() && !s.rows.empty() && r.seconds < kLimitMinutes;
    std::ostringstream os;
    os << s.rows.size() << " primes, " << s.violations.size() << " violations";
    if (!s.violations.empty()) os << " (first p=" << s.violations.front() << ")";
    r.detail = os.str();
    return r;
  }

  Result ac03() {
    Result r{3, false, "rank-1 weights in {1, 2, q-q/p, q-q/p-1} with exact class prediction", "", 0};
    const auto t0 = detail::Clock::now();
    std::vector<std::string> parts;
    bool ok = true;
    for (std::uint32_t q : {5u, 9u, 25u, 27u, 49u}) {
      const Rank1SweepResult s = sweep_rank1(detail::field_of_order(q), true);
      const std::uint64_t bad = s.outside_set + s.mismatches + s.expansion_mismatches;
      ok = ok && bad == 0 && s.instances == std::uint64_t{q - 1} * q * q;
      parts.push_back("q=" + std::to_string(q) + ":" + std::to_string(s.instances) + "/" + std::to_string(bad));
    }
    r.seconds = detail::since(t0);
    r.pass = ok && r.seconds < kLimitSeconds;
    r.detail = "instances/mismatches " + detail::join(parts, " ");
    return r;
  }

  Result ac04() {
    Result r{4, false, "normalized rank-2 sweep: case weights and sharp minimum", "", 0};
    const auto& sw = sweeps();
    r.seconds = sweep_seconds_;
    bool ok = true;
    std::vector<std::string> parts;
    std::vector<std::string> failures;
    for (std::uint32_t q : rank2_sweep_qs()) {
      const Rank2SweepResult& s = sw.at(q);
      const bool prime = s.p == q;
      const bool i_ok = s.case_a_mismatches == 0 && s.cases[0].chains > 0;
      const bool ii_ok = s.case_b_mismatches == 0 && s.cases[1].chains > 0;
      bool iii_ok = false;
      const auto& mw = s.overall.min_weight;
      if (prime) {
        iii_ok = mw && static_cast<std::int64_t>(*mw) == s.bound_cor;
      } else {
        iii_ok = mw && static_cast<std::int64_t>(*mw) >= s.bound_cor && s.cor_violations == 0;
      }
      ok = ok && i_ok && ii_ok && iii_ok;
      parts.push_back("q=" + std::to_string(q) + ":min=" + (mw ? std::to_string(*mw) : "none") +
                      (prime ? "==" : ">=") + std::to_string(s.bound_cor));
      if (!i_ok) failures.push_back("q=" + std::to_string(q) + " case a");
      if (!ii_ok) failures.push_back("q=" + std::to_string(q) + " case b");
      if (!iii_ok) {
        failures.push_back("q=" + std::to_string(q) +
                           (mw ? " minimum off the bound" : " has no chain of exact Carlitz rank 2"));
      }
    }
    r.pass = ok && r.seconds < kLimitSeconds;
    r.detail = detail::join(parts, " ");
    if (!failures.empty()) r.detail += " | failed: " + detail::join(failures, "; ");
    return r;
  }

  Result ac05() {
    Result r{5, false, "f1 over F_11 and f2 over F_121", "", 0};
    const auto t0 = detail::Clock::now();
    const Poly f1 = example_fn(1);
    const Chain ch1 = example_fn_chain(1);
    const bool perm = is_permutation(f1);
    const RankReport rk = rank_upto2(f1);
    const bool same = expand_chain(ch1) == f1;
    const Poly f2 = example_fn(2);
    r.seconds = detail::since(t0);
    r.pass = f1.weight() == 6 && perm && rk.rank == RankClass::kTwo && same && f2.weight() == 106 &&
             r.seconds < kLimitSeconds;
    std::ostringstream os;
    os << "w(f1)=" << f1.weight() << " perm=" << perm << " rank=" << to_string(rk.rank) << " chain_form=" << same
       << " w(f2)=" << f2.weight();
    r.detail = os.str();
    return r;
  }

  Result ac06() {
    Result r{6, false, "closed form for length-2 chains equals the chain expansion", "", 0};
    const auto t0 = detail::Clock::now();
    std::uint64_t checked = 0;
    std::uint64_t bad = 0;
    auto check = [&](const FieldCtx& F, Fe a0, Fe a1, Fe a2, Fe a3) {
      ++checked;
      if (!(rank2_coeffs(F, a0, a1, a2, a3) == expand_chain(Chain(F, {a0, a1, a2, a3})))) ++bad;
    };
    for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u, 17u, 19u, 23u, 25u, 27u}) {
      const FieldCtx F = detail::field_of_order(q);
      // Parallel over a0; results are plain counters summed afterwards.
      std::vector<std::uint64_t> local(q, 0);
      parallel_for(q - 1, opt_.jobs, [&](std::size_t i) {
        const Fe a0{static_cast<std::uint32_t>(i + 1)};
        for (std::uint32_t a1 = 0; a1 < q; ++a1)
          for (std::uint32_t a2 = 1; a2 < q; ++a2)
            for (std::uint32_t a3 = 0; a3 < q; ++a3) {
              if (!(rank2_coeffs(F, a0, Fe{a1}, Fe{a2}, Fe{a3}) == expand_chain(Chain(F, {a0, Fe{a1}, Fe{a2}, Fe{a3}}))))
                ++local[i];
            }
      });
      for (auto v : local) bad += v;
      checked += std::uint64_t{q - 1} * q * (q - 1) * q;
    }
    std::mt19937_64 rng(opt_.seed ^ 0x6);
    for (std::uint32_t q : {49u, 81u, 121u}) {
      const FieldCtx F = detail::field_of_order(q);
      std::uniform_int_distribution<std::uint32_t> any(0, q - 1);
      std::uniform_int_distribution<std::uint32_t> nonzero(1, q - 1);
      for (int t = 0; t < 1000; ++t) {
        const Fe a0{nonzero(rng)}, a1{any(rng)}, a2{nonzero(rng)}, a3{any(rng)};
        check(F, a0, a1, a2, a3);
      }
    }
    r.seconds = detail::since(t0);
    r.pass = bad == 0;
    r.detail = std::to_string(checked) + " tuples, " + std::to_string(bad) + " mismatches";
    return r;
  }

  Result ac07() {
    Result r{7, false, "window counts within sqrt(3M/2 - 39/16) + 5/4", "", 0};
    const auto t0 = detail::Clock::now();
    std::uint64_t queries = 0;
    std::uint64_t violations = 0;
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u}) {
      const FieldCtx F = make_field(p);
      // allowed[M] = largest count k with k <= bound(M), by exact comparison.
      std::vector<std::uint64_t> allowed(p + 1, 0);
      for (std::uint32_t m = 3; m <= p; ++m) {
        const Surd b = lemma_window_bound(m);
        std::uint64_t k = 0;
        while ((b <=> Rational(static_cast<std::int64_t>(k + 1))) >= 0) ++k;
        allowed[m] = k;
      }
      std::vector<std::uint64_t> local(p, 0);
      parallel_for(p, opt_.jobs, [&](std::size_t g) {
        const Fe gamma{static_cast<std::uint32_t>(g)};
        for (std::uint32_t c = 1; c < p; ++c)
          for (std::uint32_t d = 0; d < p; ++d)
            for (std::uint32_t L = 0; L < p; ++L)
              for (std::uint32_t m = 3; m <= p; ++m) {
                const std::uint64_t n = count_exp_linear({F, gamma, Fe{c}, Fe{d}, L, m});
                if (n > allowed[m]) ++local[g];
              }
      });
      for (auto v : local) violations += v;
      queries += std::uint64_t{p} * (p - 1) * p * p * (p - 2);
    }
    r.seconds = detail::since(t0);
    r.pass = violations == 0 && r.seconds < kLimitSeconds;
    r.detail = std::to_string(queries) + " windows, " + std::to_string(violations) + " violations";
    return r;
  }

  Result ac08() {
    Result r{8, false, "full-range counts within q/p + sqrt(3p/2 - 39/16) + 1/4", "", 0};
    const auto t0 = detail::Clock::now();
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> parts;
    for (std::uint32_t q : {9u, 25u, 27u, 49u, 81u, 121u}) {
      const FieldCtx F = detail::field_of_order(q);
      const Surd bound = full_range_bound(F);
      std::uint64_t worst = 0;
      for (std::uint32_t g = 0; g < q; ++g) {
        if (Fe{g} == F.one()) continue;
        const std::uint64_t n = count_full(F, Fe{g});
        worst = std::max(worst, n);
        ++checked;
        if ((bound <=> Rational(static_cast<std::int64_t>(n))) < 0) ++violations;
      }
      parts.push_back("q=" + std::to_string(q) + ":" + std::to_string(worst) + "<=" + bound.str());
    }
    r.seconds = detail::since(t0);
    r.pass = violations == 0 && r.seconds < kLimitSeconds;
    r.detail = std::to_string(checked) + " gammas, " + std::to_string(violations) + " violations; " +
               detail::join(parts, " ");
    return r;
  }

  Result ac09() {
    Result r{9, false, "periodic match counts: multiplicity sum and injective window bound", "", 0};
    const auto t0 = detail::Clock::now();
    std::mt19937_64 rng(opt_.seed ^ 0x9);
    std::uniform_int_distribution<std::uint32_t> period(1, 30);
    std::uint64_t count_mismatch = 0;
    std::uint64_t window_violations = 0;
    std::uint64_t injective_cases = 0;
    for (int t = 0; t < 1000; ++t) {
      std::uint32_t n1 = 0, n2 = 0;
      do {
        n1 = period(rng);
        n2 = period(rng);
      } while (std::gcd(n1, n2) != 1);
      const bool injective = t % 2 == 0;
      auto make = [&](std::uint32_t n) {
        std::vector<std::uint32_t> v(n);
        if (injective) {
          // A random injection into [0, 40).
          std::vector<std::uint32_t> pool(40);
          std::iota(pool.begin(), pool.end(), 0u);
          std::shuffle(pool.begin(), pool.end(), rng);
          std::copy_n(pool.begin(), n, v.begin());
        } else {
          std::uniform_int_distribution<std::uint32_t> val(0, 4);
          for (auto& x : v) x = val(rng);
        }
        return v;
      };
      const auto g1 = make(n1);
      const auto g2 = make(n2);
      const std::span<const std::uint32_t> s1(g1), s2(g2);
      if (crt_direct_count(s1, s2) != crt_multiplicity_count(s1, s2)) ++count_mismatch;
      std::uniform_int_distribution<std::int64_t> kk(-50, 50);
      std::uniform_int_distribution<std::int64_t> ll(0, 3);
      const CrtWindowCheck w = crt_window_check(s1, s2, kk(rng), ll(rng));
      injective_cases += w.injective;
      if (!w.holds) ++window_violations;
    }
    r.seconds = detail::since(t0);
    r.pass = count_mismatch == 0 && window_violations == 0 && injective_cases > 0;
    r.detail = "1000 pairs, " + std::to_string(injective_cases) + " injective, " + std::to_string(count_mismatch) +
               " count mismatches, " + std::to_string(window_violations) + " bound violations";
    return r;
  }

  Result ac10() {
    Result r{10, false, "linear complexity equals folded weight", "", 0};
    const auto t0 = detail::Clock::now();
    std::uint64_t checked = 0;
    std::uint64_t bad = 0;
    for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u}) {
      const FieldCtx F = detail::field_of_order(q);
      // Lengths 0, 1 and 2, one task per a0.
      std::vector<std::uint64_t> local(q, 0);
      parallel_for(q - 1, opt_.jobs, [&](std::size_t i) {
        const Fe a0{static_cast<std::uint32_t>(i + 1)};
        for (std::uint32_t a1 = 0; a1 < q; ++a1) {
          if (!blahut_check(expand_chain(Chain(F, {a0, Fe{a1}}))).equal) ++local[i];
          for (std::uint32_t a2 = 1; a2 < q; ++a2) {
            if (!blahut_check(expand_chain(Chain(F, {a0, Fe{a1}, Fe{a2}}))).equal) ++local[i];
            for (std::uint32_t a3 = 0; a3 < q; ++a3) {
              if (!blahut_check(expand_chain(Chain(F, {a0, Fe{a1}, Fe{a2}, Fe{a3}}))).equal) ++local[i];
            }
          }
        }
      });
      for (auto v : local) bad += v;
      checked += std::uint64_t{q - 1} * q * (1 + (q - 1) * (1 + q));
    }
    std::mt19937_64 rng(opt_.seed ^ 0xA);
    for (std::uint32_t q : {5u, 9u, 11u, 13u, 25u}) {
      const FieldCtx F = detail::field_of_order(q);
      std::uniform_int_distribution<std::uint32_t> any(0, q - 1);
      std::uniform_int_distribution<std::uint32_t> terms(0, q);
      for (int t = 0; t < 500; ++t) {
        // Sparse and dense polynomials alike.
        std::vector<Fe> c(q, Fe{0});
        const std::uint32_t k = terms(rng);
        for (std::uint32_t j = 0; j < k; ++j) c[any(rng)] = Fe{any(rng)};
        ++checked;
        if (!blahut_check(Poly(F, std::move(c))).equal) ++bad;
      }
    }
    r.seconds = detail::since(t0);
    r.pass = bad == 0 && r.seconds < kLimitSeconds;
    r.detail = std::to_string(checked) + " polynomials, " + std::to_string(bad) + " mismatches";
    return r;
  }

  Result ac11() {
    Result r{11, false, "prior weight and degree bounds hold on every rank-2 sweep instance", "", 0};
    const auto& sw = sweeps();
    std::uint64_t checked = 0, got = 0, deg = 0;
    for (const auto& [q, s] : sw) {
      checked += s.got_checked;
      got += s.got_violations;
      deg += s.degree_violations;
    }
    r.seconds = sweep_seconds_;
    r.pass = checked > 0 && got == 0 && deg == 0;
    r.detail = std::to_string(checked) + " instances, " + std::to_string(got) + " weight-bound and " +
               std::to_string(deg) + " degree-bound violations";
    return r;
  }

  Result ac12() {
    Result r{12, false, "generic-case weight equals (q-2) minus the full-range count", "", 0};
    const auto& sw = sweeps();
    std::uint64_t chains = 0, bad = 0;
    for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u, 25u}) {
      const Rank2SweepResult& s = sw.at(q);
      chains += s.cases[2].chains;
      bad += s.linchpin_mismatches;
    }
    r.seconds = sweep_seconds_;
    r.pass = chains > 0 && bad == 0;
    r.detail = std::to_string(chains) + " chains, " + std::to_string(bad) + " mismatches";
    return r;
  }

  Result ac13() {
    Result r{13, false, "nu_p / ln p report over the same scan", "", 0};
    const ScanReport& s = scan();
    r.seconds = scan_seconds_;
    bool emitted = !s.rows.empty() && s.rows.size() == odd_primes_in(3, opt_.nu_pmax).size();
    if (!opt_.scan_csv.empty()) {
      std::ofstream out(opt_.scan_csv);
      out << nu_csv_header() << '\n';
      for (const NuRow& row : s.rows) out << nu_row_to_csv(row) << '\n';
      emitted = emitted && static_cast<bool>(out);
    }
    r.pass = emitted && s.violations.empty();
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << "max nu_p/ln p = " << s.max_ratio_log << " at p=" << s.max_ratio_p
       << ", " << s.rows.size() << " rows";
    if (!opt_.scan_csv.empty()) os << " -> " << opt_.scan_csv;
    r.detail = os.str();
    return r;
  }

  std::vector<Result> run_all(std::ostream& out) {
    out << "ffperm acceptance seed=" << opt_.seed << " jobs=" << opt_.jobs << '\n';
    using Fn = Result (Runner::*)();
    const Fn fns[] = {&Runner::ac01, &Runner::ac02, &Runner::ac03, &Runner::ac04, &Runner::ac05,
                      &Runner::ac06, &Runner::ac07, &Runner::ac08, &Runner::ac09, &Runner::ac10,
                      &Runner::ac11, &Runner::ac12, &Runner::ac13};
    std::vector<Result> results;
    for (Fn fn : fns) {
      Result r;
      try {
        r = (this->*fn)();
      } catch (const std::exception& e) {
        r.id = static_cast<int>(results.size()) + 1;
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
      }
      out << format(r) << '\n' << std::flush;
      results.push_back(std::move(r));
    }
    const auto passed = std::count_if(results.begin(), results.end(), [](const Result& r) { return r.pass; });
    out << passed << "/" << results.size() << " criteria passed\n";
    return results;
  }

  static std::string format(const Result& r) {
    std::ostringstream os;
    os << (r.pass ? "[PASS] " : "[FAIL] ") << "AC" << std::setw(2) << std::setfill('0') << r.id << ' ' << r.title
       << " | " << r.detail << " (" << std::fixed << std::setprecision(6) << r.seconds << " s)";
    return os.str();
  }

  const ScanReport& scan() {
    if (!scan_) {
      const auto t0 = detail::Clock::now();
      scan_ = conjecture_scan(3, opt_.nu_pmax, opt_.jobs);
      scan_seconds_ = detail::since(t0);
    }
    return *scan_;
  }

  const std::map<std::uint32_t, Rank2SweepResult>& sweeps() {
    if (!sweeps_) {
      const auto t0 = detail::Clock::now();
      std::map<std::uint32_t, Rank2SweepResult> m;
      for (std::uint32_t q : rank2_sweep_qs()) {
        m.emplace(q, sweep_rank2(detail::field_of_order(q), {true, opt_.jobs}));
      }
      sweeps_ = std::move(m);
      sweep_seconds_ = detail::since(t0);
    }
    return *sweeps_;
  }

 private:
  Options opt_;
  std::optional<ScanReport> scan_;
  double scan_seconds_ = 0.0;
  std::optional<std::map<std::uint32_t, Rank2SweepResult>> sweeps_;
  double sweep_seconds_ = 0.0;
};

}  // namespace ffperm::acceptance

#endif  // FFPERM_ACCEPTANCE_HPP_
