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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ffperm/gf.hpp"
#include "ffperm/poly.hpp"

namespace ffperm {
namespace {

Poly from_ints(const FieldCtx& F, std::vector<std::int64_t> c) {
  std::vector<Fe> v;
  for (auto x : c) v.push_back(F.embed(x));
  return Poly(F, std::move(v));
}

// Interpolation written literally as sum_a f(a) (1 - (x - a)^{q-1}), using Poly arithmetic.
Poly interpolate_by_kernel(const ValueTable& t) {
  const FieldCtx& F = t.field;
  Poly acc(F);
  const Poly x = Poly::monomial(F, F.one(), 1);
  const Poly one = Poly::monomial(F, F.one(), 0);
  for (std::uint32_t a = 0; a < F.q(); ++a) {
    const Poly shifted = x - Poly::monomial(F, Fe{a}, 0);
    acc = acc + scale(t.values[a], one - pow(shifted, F.q() - 1));
  }
  return acc;
}

TEST(Poly, Reduction) {
  const FieldCtx F = make_field(5);
  EXPECT_EQ(Poly::monomial(F, F.one(), 5), Poly::monomial(F, F.one(), 1));
  const Term t1[] = {{4, F.one()}, {0, F.one()}};
  EXPECT_EQ(reduce_mod_xq_x(F, t1), from_ints(F, {1, 0, 0, 0, 1}));
  const Term t2[] = {{13, F.embed(2)}};
  const Poly r = reduce_mod_xq_x(F, t2);
  EXPECT_EQ(r, from_ints(F, {0, 2}));
  EXPECT_EQ(fold_exponent(0, 5), 0u);
  EXPECT_EQ(fold_exponent(4, 5), 4u);
  EXPECT_EQ(fold_exponent(8, 5), 4u);
}

TEST(Poly, ReductionPreservesValues) {
  const FieldCtx F = make_field(3, 2);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> el(0, F.q() - 1);
  std::uniform_int_distribution<std::uint64_t> ex(0, 500);
  for (int t = 0; t < 200; ++t) {
    std::vector<Term> terms;
    for (int k = 0; k < 4; ++k) terms.push_back({ex(rng), Fe{el(rng)}});
    const Poly f = reduce_mod_xq_x(F, terms);
    for (std::uint32_t x = 0; x < F.q(); ++x) {
      Fe direct{0};
      for (const Term& tm : terms) direct = F.add(direct, F.mul(tm.coeff, F.pow(Fe{x}, tm.exponent)));
      EXPECT_EQ(f(Fe{x}), direct);
    }
  }
}

TEST(Poly, WeightDegreeEval) {
  const FieldCtx F = make_field(5);
  EXPECT_EQ(Poly(F).weight(), 0u);
  EXPECT_FALSE(Poly(F).degree().has_value());
  const Poly f = from_ints(F, {0, 1, 1, 2});
  EXPECT_EQ(f.weight(), 3u);
  EXPECT_EQ(f.degree(), 3u);
  EXPECT_EQ(from_ints(F, {0, 0, 0, 1})(Fe{2}), Fe{3});
  EXPECT_EQ(from_ints(F, {4})(Fe{3}), Fe{4});
  EXPECT_EQ(eval_table(f).values, (std::vector<Fe>{Fe{0}, Fe{4}, Fe{2}, Fe{1}, Fe{3}}));
}

TEST(Poly, Permutation) {
  const FieldCtx F = make_field(5);
  EXPECT_TRUE(is_permutation(Poly::monomial(F, F.one(), 1)));
  EXPECT_FALSE(is_permutation(Poly::monomial(F, F.one(), 2)));
  EXPECT_TRUE(is_permutation(Poly::monomial(F, F.one(), 3)));
}

TEST(Poly, InterpolationExamples) {
  const FieldCtx F = make_field(5);
  ValueTable id{F, {Fe{0}, Fe{1}, Fe{2}, Fe{3}, Fe{4}}};
  EXPECT_EQ(interpolate(id), Poly::monomial(F, F.one(), 1));
  ValueTable c{F, std::vector<Fe>(5, Fe{3})};
  EXPECT_EQ(interpolate(c), from_ints(F, {3}));
  ValueTable t{F, {Fe{0}, Fe{4}, Fe{2}, Fe{1}, Fe{3}}};
  EXPECT_EQ(interpolate(t), from_ints(F, {0, 1, 1, 2}));
}

class InterpolationRoundTrip : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(InterpolationRoundTrip, AgreesWithKernelForm) {
  const auto [p, n] = GetParam();
  const FieldCtx F = make_field(p, n);
  std::mt19937_64 rng(p * 100 + n);
  std::uniform_int_distribution<std::uint32_t> el(0, F.q() - 1);
  for (int t = 0; t < 20; ++t) {
    ValueTable tab{F, std::vector<Fe>(F.q())};
    for (auto& v : tab.values) v = Fe{el(rng)};
    const Poly f = interpolate(tab);
    EXPECT_EQ(eval_table(f), tab);
    EXPECT_EQ(f, interpolate_by_kernel(tab));
    // And back: a random reduced polynomial is recovered from its table.
    std::vector<Fe> c(F.q());
    for (auto& v : c) v = Fe{el(rng)};
    const Poly g(F, c);
    EXPECT_EQ(interpolate(eval_table(g)), g);
  }
}

INSTANTIATE_TEST_SUITE_P(Small, InterpolationRoundTrip,
                         ::testing::Values(std::pair{3u, 1u}, std::pair{5u, 1u}, std::pair{7u, 1u},
                                           std::pair{3u, 2u}, std::pair{2u, 3u}, std::pair{5u, 2u}));

TEST(Poly, RingOps) {
  const FieldCtx F = make_field(7);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint32_t> el(0, 6);
  for (int t = 0; t < 50; ++t) {
    std::vector<Fe> a(7), b(7);
    for (auto& v : a) v = Fe{el(rng)};
    for (auto& v : b) v = Fe{el(rng)};
    const Poly f(F, a), g(F, b);
    const Poly prod = f * g, sum = f + g, diff = f - g;
    for (std::uint32_t x = 0; x < 7; ++x) {
      EXPECT_EQ(prod(Fe{x}), F.mul(f(Fe{x}), g(Fe{x})));
      EXPECT_EQ(sum(Fe{x}), F.add(f(Fe{x}), g(Fe{x})));
      EXPECT_EQ(diff(Fe{x}), F.sub(f(Fe{x}), g(Fe{x})));
      EXPECT_EQ(pow(f, 10)(Fe{x}), F.pow(f(Fe{x}), 10));
    }
  }
}

TEST(Poly, MixedFields) {
  const FieldCtx a = make_field(5);
  const FieldCtx b = make_field(7);
  const Poly f(a), g(b);
  EXPECT_THROW(f + g, Error);
  EXPECT_THROW(evaluate(f, Fe{6}), Error);
  EXPECT_THROW(Poly(a, {Fe{9}}), Error);
}

}  // namespace
}  // namespace ffperm
