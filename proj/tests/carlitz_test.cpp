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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ffperm/carlitz.hpp"
#include "ffperm/counting.hpp"
#include "ffperm/gf.hpp"
#include "ffperm/poly.hpp"
#include "ffperm/sweep.hpp"

namespace ffperm {
namespace {

Poly from_ints(const FieldCtx& F, std::vector<std::int64_t> c) {
  std::vector<Fe> v;
  for (auto x : c) v.push_back(F.embed(x));
  return Poly(F, std::move(v));
}

Chain chain_of(const FieldCtx& F, std::vector<std::int64_t> a) {
  std::vector<Fe> v;
  for (auto x : a) v.push_back(F.embed(x));
  return Chain(F, std::move(v));
}

using Table = std::vector<std::uint32_t>;

Table raw(const ValueTable& t) {
  Table out;
  for (Fe v : t.values) out.push_back(v.v);
  return out;
}

// Smallest chain length reaching each map, by enumerating every chain of
// length <= max_len and composing it pointwise.
std::map<Table, int> brute_force_ranks(const FieldCtx& F, int max_len) {
  const std::uint32_t q = F.q();
  std::map<Table, int> best;
  // Prefixes (a0, a1, a2, ..., a_k) whose inner constants are all nonzero.
  std::vector<std::vector<Fe>> prefixes;
  for (std::uint32_t a0 = 1; a0 < q; ++a0)
    for (std::uint32_t a1 = 0; a1 < q; ++a1) {
      prefixes.push_back({Fe{a0}, Fe{a1}});
      best.emplace(raw(chain_table(Chain(F, prefixes.back()))), 0);
    }
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Fe>> next;
    for (const auto& pre : prefixes) {
      for (std::uint32_t c = 0; c < q; ++c) {
        auto params = pre;
        params.push_back(Fe{c});
        best.emplace(raw(chain_table(Chain(F, params))), len);
        if (c != 0) next.push_back(std::move(params));
      }
    }
    prefixes = std::move(next);
  }
  return best;
}

TEST(Chain, Validation) {
  const FieldCtx F = make_field(5);
  EXPECT_THROW(chain_of(F, {1}), Error);
  EXPECT_THROW(chain_of(F, {0, 1}), Error);
  EXPECT_THROW(chain_of(F, {1, 1, 0, 2}), Error);
  EXPECT_NO_THROW(chain_of(F, {1, 0, 0}));
}

TEST(Chain, ExpansionExamples) {
  const FieldCtx F = make_field(5);
  EXPECT_EQ(expand_chain(chain_of(F, {1, 3})), from_ints(F, {3, 1}));
  EXPECT_EQ(expand_chain(chain_of(F, {1, 0, 0})), from_ints(F, {0, 0, 0, 1}));
  EXPECT_EQ(expand_chain(chain_of(F, {-1, 1, 4, 0})), from_ints(F, {0, 1, 1, 2}));
  EXPECT_EQ(raw(chain_table(chain_of(F, {-1, 1, 4, 0}))), (Table{0, 4, 2, 1, 3}));
}

TEST(Chain, SymbolicMatchesTable) {
  for (auto [p, n] : {std::pair{5u, 1u}, std::pair{7u, 1u}, std::pair{3u, 2u}, std::pair{11u, 1u}}) {
    const FieldCtx F = make_field(p, n);
    std::mt19937_64 rng(p + 17 * n);
    std::uniform_int_distribution<std::uint32_t> any(0, F.q() - 1), nz(1, F.q() - 1);
    for (int t = 0; t < 40; ++t) {
      std::vector<Fe> a{Fe{nz(rng)}, Fe{any(rng)}};
      const int len = t % 4;
      for (int k = 0; k < len; ++k) {
        a.push_back(Fe{nz(rng)});
      }
      if (len > 0) a.back() = Fe{any(rng)};
      const Chain ch(F, a);
      const Poly f = expand_chain(ch);
      EXPECT_EQ(f, expand_chain_symbolic(ch));
      EXPECT_TRUE(is_permutation(f));
    }
  }
}

TEST(Convergents, PolesAndAgreement) {
  const FieldCtx F = make_field(5);
  const Chain ch = chain_of(F, {-1, 1, 4, 0});
  const Convergent cv = convergents(ch);
  EXPECT_EQ(cv.poles.size(), 2u);
  EXPECT_TRUE(cv.poles.contains(Fe{1}));
  EXPECT_TRUE(cv.poles.contains(Fe{0}));
  EXPECT_TRUE(agreement_check(ch));
  EXPECT_TRUE(agreement_check(chain_of(F, {1, 0, 0})));
  // Perturb a non-pole entry.
  ValueTable t = chain_table(ch);
  t.values[3] = F.add(t.values[3], F.one());
  EXPECT_FALSE(agreement_check(ch, t));
}

TEST(Convergents, AgreeOffPolesOnRandomChains) {
  for (auto [p, n] : {std::pair{5u, 1u}, std::pair{3u, 2u}, std::pair{11u, 1u}}) {
    const FieldCtx F = make_field(p, n);
    std::mt19937_64 rng(p * 3 + n);
    std::uniform_int_distribution<std::uint32_t> any(0, F.q() - 1), nz(1, F.q() - 1);
    for (int t = 0; t < 100; ++t) {
      std::vector<Fe> a{Fe{nz(rng)}, Fe{any(rng)}};
      const int len = 1 + t % 4;
      for (int k = 0; k < len; ++k) a.push_back(Fe{nz(rng)});
      a.back() = Fe{any(rng)};
      const Chain ch(F, a);
      EXPECT_TRUE(agreement_check(ch));
      EXPECT_LE(convergents(ch).poles.size(), ch.length());
    }
  }
}

TEST(Rank2Closed, Examples) {
  const FieldCtx F = make_field(5);
  const Poly fa = rank2_coeffs(F, F.embed(-1), Fe{0}, Fe{1}, F.embed(-1));
  EXPECT_EQ(fa, from_ints(F, {0, 4, 3, 2}));
  EXPECT_EQ(fa.weight(), 3u);
  const Poly fb = rank2_coeffs(F, F.embed(-1), Fe{1}, Fe{4}, Fe{0});
  EXPECT_EQ(fb, from_ints(F, {0, 1, 1, 2}));
  EXPECT_EQ(rank2_piecewise_eval(F, Fe{1}, Fe{4}, Fe{0}, Fe{2}), Fe{1});
  EXPECT_THROW(rank2_coeffs(F, Fe{0}, Fe{1}, Fe{1}, Fe{0}), Error);
}

TEST(Rank2Closed, PiecewiseBranches) {
  const FieldCtx F = make_field(7);
  for (std::uint32_t a1 = 0; a1 < 7; ++a1)
    for (std::uint32_t a2 = 1; a2 < 7; ++a2)
      for (std::uint32_t a3 = 0; a3 < 7; ++a3) {
        const Chain ch(F, {F.one(), Fe{a1}, Fe{a2}, Fe{a3}});
        for (std::uint32_t x = 0; x < 7; ++x) {
          EXPECT_EQ(rank2_piecewise_eval(F, Fe{a1}, Fe{a2}, Fe{a3}, Fe{x}), ch(Fe{x}));
        }
        const Fe x1 = F.neg(Fe{a1});
        EXPECT_EQ(rank2_piecewise_eval(F, Fe{a1}, Fe{a2}, Fe{a3}, x1), F.add(F.inv0(Fe{a2}), Fe{a3}));
        const Fe x2 = F.neg(F.add(Fe{a1}, F.inv0(Fe{a2})));
        if (x2 != x1) {
          EXPECT_EQ(rank2_piecewise_eval(F, Fe{a1}, Fe{a2}, Fe{a3}, x2), Fe{a3});
        }
      }
}

TEST(Rank2Closed, MatchesExpansionOverF9) {
  const FieldCtx F = make_field(3, 2);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::uint32_t> any(0, 8), nz(1, 8);
  for (int t = 0; t < 300; ++t) {
    const Fe a0{nz(rng)}, a1{any(rng)}, a2{nz(rng)}, a3{any(rng)};
    EXPECT_EQ(rank2_coeffs(F, a0, a1, a2, a3), expand_chain(Chain(F, {a0, a1, a2, a3})));
  }
}

TEST(Rank1, Examples) {
  const FieldCtx F = make_field(5);
  const auto e1 = rank1_weight(F, Fe{1}, Fe{0}, Fe{0});
  EXPECT_EQ(e1.poly, from_ints(F, {0, 0, 0, 1}));
  EXPECT_EQ(e1.weight_class, Rank1WeightClass::kMonomial);
  EXPECT_EQ(rank1_weight(F, Fe{1}, Fe{0}, Fe{2}).poly.weight(), 2u);
  const auto e3 = rank1_weight(F, Fe{1}, Fe{1}, Fe{0});
  EXPECT_EQ(e3.poly, from_ints(F, {1, 3, 3, 1}));
  EXPECT_EQ(e3.predicted_weight, 4u);
  EXPECT_THROW(rank1_weight(F, Fe{0}, Fe{1}, Fe{0}), Error);
}

TEST(Rank1, SweepIsClean) {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u, 25u, 27u}) {
    const FieldCtx F = q == 9 ? make_field(3, 2) : q == 25 ? make_field(5, 2) : q == 27 ? make_field(3, 3)
                                                                                        : make_field(q);
    const Rank1SweepResult r = sweep_rank1(F, true);
    EXPECT_EQ(r.instances, std::uint64_t{q - 1} * q * q);
    EXPECT_EQ(r.outside_set + r.mismatches + r.expansion_mismatches, 0u) << "q=" << q;
  }
}

TEST(Rank, Examples) {
  const FieldCtx F = make_field(5);
  EXPECT_EQ(rank_upto2(from_ints(F, {3, 1})).rank, RankClass::kZero);
  const RankReport r1 = rank_upto2(from_ints(F, {0, 0, 0, 1}));
  EXPECT_EQ(r1.rank, RankClass::kOne);
  ASSERT_TRUE(r1.witness);
  EXPECT_EQ(expand_chain(*r1.witness), from_ints(F, {0, 0, 0, 1}));
  EXPECT_THROW(rank_upto2(from_ints(F, {0, 0, 1})), Error);
  EXPECT_THROW(rank_upto2(from_ints(F, {0, 0, 0, 1}), 3), Error);
}

// x + x^2 + 2x^3 over F_5 comes from the length-2 chain (-1, 1, 4, 0) but is
// also a single-inversion chain, so its Carlitz rank is 1.
TEST(Rank, ShortChainOverF5HasRankOne) {
  const FieldCtx F = make_field(5);
  const Poly f = from_ints(F, {0, 1, 1, 2});
  const auto truth = brute_force_ranks(F, 2);
  EXPECT_EQ(truth.at(raw(eval_table(f))), 1);
  const RankReport r = rank_upto2(f);
  EXPECT_EQ(r.rank, RankClass::kOne);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->params(), (std::vector<Fe>{Fe{3}, Fe{3}, Fe{3}}));
  EXPECT_EQ(expand_chain(*r.witness), f);
}

TEST(Rank, EveryPermutationOfF5HasRankAtMostOne) {
  const FieldCtx F = make_field(5);
  Table perm{0, 1, 2, 3, 4};
  int count = 0;
  do {
    ValueTable t{F, {}};
    for (auto v : perm) t.values.push_back(Fe{v});
    EXPECT_NE(carlitz_rank_upto2(t).rank, RankClass::kTwo);
    EXPECT_NE(carlitz_rank_upto2(t).rank, RankClass::kMoreThanTwo);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(count, 120);
}

TEST(Rank, MatchesBruteForceEnumeration) {
  for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u}) {
    const FieldCtx F = q == 9 ? make_field(3, 2) : make_field(q);
    const int depth = q <= 7 ? 3 : 2;
    const auto truth = brute_force_ranks(F, depth);
    for (const auto& [tab, rank] : truth) {
      ValueTable t{F, {}};
      for (auto v : tab) t.values.push_back(Fe{v});
      const RankReport r = carlitz_rank_upto2(t);
      const int got = static_cast<int>(r.rank);
      EXPECT_EQ(got, std::min(rank, 3)) << "q=" << q;
      if (r.witness) {
        EXPECT_EQ(raw(chain_table(*r.witness)), tab);
      }
    }
  }
}

TEST(Rank, ExactRankTwoOverF7) {
  const FieldCtx F = make_field(7);
  const auto truth = brute_force_ranks(F, 2);
  const auto n2 = std::count_if(truth.begin(), truth.end(), [](const auto& kv) { return kv.second == 2; });
  EXPECT_GT(n2, 0);
  const auto truth5 = brute_force_ranks(make_field(5), 2);
  EXPECT_EQ(std::count_if(truth5.begin(), truth5.end(), [](const auto& kv) { return kv.second == 2; }), 0);
}

TEST(Bounds, RankTwoDisplays) {
  const FieldCtx F11 = make_field(11);
  EXPECT_EQ(thm_rank2_bound(F11).str(), "13/2");
  EXPECT_EQ(cor_rank2_bound(F11, 3), 6);
  EXPECT_EQ(cor_rank2_bound(make_field(11, 2), 3), 106);
  EXPECT_EQ(cor_rank2_bound(make_field(5), 2), 1);
  EXPECT_NEAR(thm_rank2_bound(make_field(3, 2)).to_double(), 9 - 3 - std::sqrt(2.0625) + 0.25, 1e-12);
  EXPECT_THROW(thm_rank2_bound(make_field(2, 3)), Error);
}

TEST(Bounds, PriorBounds) {
  const GotBounds g = got_bounds(6, 11, 2);
  EXPECT_EQ(g.weight_lower, Rational(11, 3) - Rational(2));
  EXPECT_EQ(g.crk_lower, Rational(11, 8) - Rational(1));
  EXPECT_EQ(got_bounds(106, 121, 2).weight_lower, Rational(121, 3) - Rational(2));
  EXPECT_THROW(got_bounds(0, 11, 2), Error);
}

TEST(Bounds, GotShape) {
  const FieldCtx F = make_field(5);
  EXPECT_FALSE(got_applicable(from_ints(F, {1, 1})));
  EXPECT_FALSE(got_applicable(from_ints(F, {2, 0, 0, 3})));
  EXPECT_TRUE(got_applicable(from_ints(F, {0, 1, 1, 2})));
}

TEST(Bounds, DegreeRank) {
  const FieldCtx F = make_field(5);
  EXPECT_TRUE(degree_rank_check(from_ints(F, {0, 0, 0, 1}), 1));
  EXPECT_TRUE(degree_rank_check(from_ints(F, {0, 1, 1, 2}), 2));
  EXPECT_THROW(degree_rank_check(from_ints(F, {0, 1}), 0), Error);
}

TEST(Example, FamilyF11) {
  const Poly f1 = example_fn(1);
  EXPECT_EQ(f1.weight(), 6u);
  EXPECT_TRUE(is_permutation(f1));
  EXPECT_EQ(rank_upto2(f1).rank, RankClass::kTwo);
  EXPECT_EQ(expand_chain(example_fn_chain(1)), f1);
  const Poly f2 = example_fn(2);
  EXPECT_EQ(f2.weight(), 106u);
  EXPECT_EQ(f2, expand_chain(example_fn_chain(2)));
  EXPECT_EQ(f2, rank2_coeffs(f2.field(), f2.field().embed(-1), f2.field().embed(2), f2.field().one(),
                             f2.field().embed(-8)));
  EXPECT_THROW(example_fn(3), Error);
}

class Rank2Sweep : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(Rank2Sweep, CasesAndBounds) {
  const auto [p, n] = GetParam();
  const FieldCtx F = make_field(p, n);
  const Rank2SweepResult r = sweep_rank2(F, {true, 2});
  EXPECT_EQ(r.violations(), 0u);
  EXPECT_EQ(r.overall.chains, std::uint64_t{F.q()} * (F.q() - 1));
  EXPECT_EQ(r.nu_p, nu_p(p).nu);
  if (F.q() > 5) {
    ASSERT_TRUE(r.overall.min_weight);
    EXPECT_GE(static_cast<std::int64_t>(*r.overall.min_weight), r.bound_cor);
    if (n == 1) {
      EXPECT_EQ(static_cast<std::int64_t>(*r.overall.min_weight), r.bound_cor);
    }
  }
  // Determinism across worker counts.
  const Rank2SweepResult r1 = sweep_rank2(F, {true, 1});
  EXPECT_EQ(r1.overall.min_weight, r.overall.min_weight);
  EXPECT_EQ(r1.got_checked, r.got_checked);
  EXPECT_EQ(r1.thm_flags, r.thm_flags);
}

INSTANTIATE_TEST_SUITE_P(Fields, Rank2Sweep,
                         ::testing::Values(std::pair{5u, 1u}, std::pair{7u, 1u}, std::pair{3u, 2u}, std::pair{11u, 1u},
                                           std::pair{13u, 1u}, std::pair{5u, 2u}, std::pair{3u, 3u}));

TEST(Rank2SweepFull, UnnormalizedMatchesCaseFormulas) {
  const FieldCtx F = make_field(7);
  const Rank2SweepResult r = sweep_rank2(F, {false, 1});
  EXPECT_EQ(r.overall.chains, 6u * 7 * 6 * 7);
  EXPECT_EQ(r.violations(), 0u);
}

TEST(Rank2SweepFull, NoExactRankTwoOverF5) {
  const Rank2SweepResult r = sweep_rank2(make_field(5), {false, 1});
  EXPECT_EQ(r.overall.exact_rank2, 0u);
  EXPECT_FALSE(r.overall.min_weight.has_value());
}

}  // namespace
}  // namespace ffperm
