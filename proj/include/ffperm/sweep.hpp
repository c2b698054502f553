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

// Exhaustive sweeps over short chains: the rank-1 weight classification and
// the rank-2 weight cases, with every bound checked on every instance.

#ifndef FFPERM_SWEEP_HPP_
#define FFPERM_SWEEP_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffperm/carlitz.hpp"
#include "ffperm/counting.hpp"
#include "ffperm/exact.hpp"
#include "ffperm/gf.hpp"
#include "ffperm/parallel.hpp"
#include "ffperm/poly.hpp"

namespace ffperm {

/// A chain whose check failed, with the reason.
struct Counterexample {
  std::vector<Fe> chain;
  std::string reason;
  std::int64_t observed = 0;
  std::int64_t expected = 0;
};

struct Rank1SweepResult {
  std::uint32_t q = 0;
  std::uint64_t instances = 0;
  std::uint64_t outside_set = 0;  // weight not in {1, 2, q-q/p, q-q/p-1}
  std::uint64_t mismatches = 0;   // class predicted a different weight
  std::uint64_t expansion_mismatches = 0;  // binomial expansion != chain expansion
  std::vector<Counterexample> counterexamples;
};

/// All (a0, a1, a2) with a0 != 0. `check_expansion` also compares the binomial
/// expansion against the interpolated chain (O(q^2) each).
inline Rank1SweepResult sweep_rank1(const FieldCtx& F, bool check_expansion = true) {
  detail::require_odd(F);
  const std::uint32_t q = F.q();
  const std::uint32_t p = F.p();
  const std::size_t allowed[] = {1, 2, q - q / p, q - q / p - 1};
  Rank1SweepResult res;
  res.q = q;
  for (std::uint32_t a0 = 1; a0 < q; ++a0) {
    for (std::uint32_t a1 = 0; a1 < q; ++a1) {
      for (std::uint32_t a2 = 0; a2 < q; ++a2) {
        ++res.instances;
        const Rank1Expansion e = rank1_weight(F, Fe{a0}, Fe{a1}, Fe{a2});
        const std::size_t w = e.poly.weight();
        const std::vector<Fe> params{Fe{a0}, Fe{a1}, Fe{a2}};
        if (std::find(std::begin(allowed), std::end(allowed), w) == std::end(allowed)) {
          ++res.outside_set;
          res.counterexamples.push_back({params, "weight outside rank-1 set", static_cast<std::int64_t>(w), 0});
        }
        if (w != e.predicted_weight) {
          ++res.mismatches;
          res.counterexamples.push_back({params, "weight class mismatch", static_cast<std::int64_t>(w),
                                         static_cast<std::int64_t>(e.predicted_weight)});
        }
        if (check_expansion && !(expand_chain(Chain(F, params)) == e.poly)) {
          ++res.expansion_mismatches;
          res.counterexamples.push_back({params, "binomial expansion differs from chain", 0, 0});
        }
      }
    }
  }
  return res;
}

enum class Rank2Case { kA, kB, kC };  // a1 = 0 | a1 + a2^{-1} = 0 | generic

inline std::string_view to_string(Rank2Case c) {
  switch (c) {
    case Rank2Case::kA: return "a";
    case Rank2Case::kB: return "b";
    case Rank2Case::kC: return "c";
  }
  return "?";
}

struct Rank2CaseStats {
  std::uint64_t chains = 0;
  std::uint64_t exact_rank2 = 0;
  std::optional<std::uint64_t> min_weight;  // over exact rank-2 chains
  std::uint64_t violations = 0;
};

struct Rank2SweepOptions {
  bool normalize = true;  // a0 = -1 and constant term 0
  unsigned jobs = 1;
};

struct Rank2SweepResult {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t nu_p = 0;
  Surd bound_thm;             // q - q/p - sqrt(3p/2 - 39/16) + 1/4
  std::int64_t bound_cor = 0; // q - q/p - 1 - nu_p
  Rank2CaseStats cases[3];
  Rank2CaseStats overall;
  std::uint64_t case_a_mismatches = 0;   // weight != q - q/p - 1
  std::uint64_t case_b_mismatches = 0;   // weight != q - 2
  std::uint64_t linchpin_mismatches = 0; // weight != (q-2) - count_full(gamma)
  std::uint64_t cor_violations = 0;      // exact rank 2 with weight < bound_cor
  std::uint64_t got_violations = 0;      // weight <= q/3 - 2 or Crk <= q/(w+2) - 1
  std::uint64_t degree_violations = 0;   // 2 < q - 1 - deg
  std::uint64_t thm_flags = 0;           // exact rank 2 with weight below bound_thm (reported, not a violation)
  std::uint64_t got_checked = 0;
  std::vector<Counterexample> counterexamples;

  std::uint64_t violations() const {
    return case_a_mismatches + case_b_mismatches + linchpin_mismatches + cor_violations + got_violations +
           degree_violations;
  }
};

namespace detail {

struct Rank2Instance {
  std::vector<Fe> chain;
  Rank2Case kind;
  std::uint64_t weight;
  bool exact_rank2;
  bool got_applicable;
  bool got_ok;
  bool degree_ok;
  bool constant_nonzero;
  std::optional<std::uint64_t> linchpin_count;  // case (c): count_full(gamma)
};

inline Rank2Instance evaluate_rank2(const FieldCtx& F, Fe a0, Fe a1, Fe a2, Fe a3) {
  const std::uint32_t q = F.q();
  Rank2Instance r;
  r.chain = {a0, a1, a2, a3};
  const Fe eta = F.add(a1, F.inv0(a2));
  r.kind = a1.v == 0 ? Rank2Case::kA : (eta.v == 0 ? Rank2Case::kB : Rank2Case::kC);
  const Poly f = rank2_coeffs(F, a0, a1, a2, a3);
  r.weight = f.weight();
  r.constant_nonzero = f.coeff(0).v != 0;
  r.exact_rank2 = !rank_at_most1(chain_table(Chain(F, r.chain)));
  r.got_applicable = r.exact_rank2 && got_applicable(f);
  r.got_ok = true;
  r.degree_ok = true;
  if (r.got_applicable) {
    const GotBounds b = got_bounds(static_cast<std::int64_t>(r.weight), q, 2);
    r.got_ok = Rational(static_cast<std::int64_t>(r.weight)) > b.weight_lower && Rational(2) > b.crk_lower;
    r.degree_ok = degree_rank_check(f, 2);
  }
  if (r.kind == Rank2Case::kC) r.linchpin_count = count_full(F, F.div(eta, a1));
  return r;
}

}  // namespace detail

/// Sweeps length-2 chains. Normalized: a0 = -1 and a3 chosen so the constant
/// term vanishes, leaving q(q-1) chains; otherwise all q^2 (q-1)^2.
inline Rank2SweepResult sweep_rank2(const FieldCtx& F, const Rank2SweepOptions& opt = {}) {
  detail::require_odd(F);
  const std::uint32_t q = F.q();
  const std::uint32_t p = F.p();
  Rank2SweepResult res;
  res.q = q;
  res.p = p;
  res.nu_p = nu_p(p).nu;
  res.bound_thm = thm_rank2_bound(F);
  res.bound_cor = cor_rank2_bound(F, res.nu_p);

  // One task per a1; instances inside are in (a0, a2, a3) order.
  std::vector<std::vector<detail::Rank2Instance>> per_a1(q);
  parallel_for(q, opt.jobs, [&](std::size_t i1) {
    const Fe a1{static_cast<std::uint32_t>(i1)};
    auto& out = per_a1[i1];
    for (std::uint32_t a0v = 1; a0v < q; ++a0v) {
      const Fe a0{a0v};
      if (opt.normalize && a0 != F.neg(F.one())) continue;
      for (std::uint32_t a2v = 1; a2v < q; ++a2v) {
        const Fe a2{a2v};
        if (opt.normalize) {
          // c = a3 + K  =>  a3 = -K makes the constant term vanish.
          const Fe k = rank2_constant(F, a1, a2, Fe{0});
          out.push_back(detail::evaluate_rank2(F, a0, a1, a2, F.neg(k)));
          continue;
        }
        for (std::uint32_t a3v = 0; a3v < q; ++a3v) out.push_back(detail::evaluate_rank2(F, a0, a1, a2, Fe{a3v}));
      }
    }
  });

  const std::uint64_t case_a_weight = q - q / p - 1;
  const std::uint64_t case_b_weight = q - 2;
  auto record = [&](Rank2CaseStats& s, const detail::Rank2Instance& r) {
    ++s.chains;
    if (!r.exact_rank2) return;
    ++s.exact_rank2;
    s.min_weight = s.min_weight ? std::min(*s.min_weight, r.weight) : r.weight;
  };
  for (const auto& bucket : per_a1) {
    for (const detail::Rank2Instance& r : bucket) {
      Rank2CaseStats& cs = res.cases[static_cast<int>(r.kind)];
      record(cs, r);
      record(res.overall, r);
      // A nonzero constant term adds one to every case formula.
      const std::uint64_t shift = r.constant_nonzero ? 1 : 0;
      auto fail = [&](std::uint64_t& counter, const char* why, std::int64_t obs, std::int64_t exp) {
        ++counter;
        ++cs.violations;
        ++res.overall.violations;
        if (res.counterexamples.size() < 64) res.counterexamples.push_back({r.chain, why, obs, exp});
      };
      const auto w = static_cast<std::int64_t>(r.weight);
      if (r.kind == Rank2Case::kA && r.weight != case_a_weight + shift) {
        fail(res.case_a_mismatches, "case a weight", w, static_cast<std::int64_t>(case_a_weight + shift));
      }
      if (r.kind == Rank2Case::kB && r.weight != case_b_weight + shift) {
        fail(res.case_b_mismatches, "case b weight", w, static_cast<std::int64_t>(case_b_weight + shift));
      }
      if (r.linchpin_count) {
        const std::uint64_t expect = q - 2 - *r.linchpin_count + shift;
        if (r.weight != expect) fail(res.linchpin_mismatches, "case c count identity", w, static_cast<std::int64_t>(expect));
      }
      if (r.exact_rank2 && w < res.bound_cor) fail(res.cor_violations, "below sharp rank-2 bound", w, res.bound_cor);
      if (r.got_applicable) {
        ++res.got_checked;
        if (!r.got_ok) fail(res.got_violations, "prior weight/rank bound", w, 0);
        if (!r.degree_ok) fail(res.degree_violations, "degree/rank bound", w, 0);
      }
      if (r.exact_rank2 && (res.bound_thm <=> Rational(w)) > 0) ++res.thm_flags;
    }
  }
  return res;
}

}  // namespace ffperm

#endif  // FFPERM_SWEEP_HPP_
