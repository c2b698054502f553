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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ffperm/exact.hpp"

namespace ffperm {
namespace {

TEST(Rational, NormalizesAndCompares) {
  EXPECT_EQ(Rational(6, -4).num(), -3);
  EXPECT_EQ(Rational(6, -4).den(), 2);
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(7, 2).str(), "7/2");
  EXPECT_EQ(Rational(4).str(), "4");
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Surd, Simplifies) {
  EXPECT_EQ(window_radical(11).str(), "15/4");  // 3*11/2 - 39/16 = 225/16
  EXPECT_EQ(window_radical(5).str(), "9/4");
  EXPECT_EQ(window_radical(3).str(), "sqrt(33)/4");
  EXPECT_EQ(Surd::sqrt_of(Rational(8)).str(), "2*sqrt(2)");
}

TEST(Surd, ComparisonMatchesDoubles) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> num(-200, 200);
  std::uniform_int_distribution<std::int64_t> den(1, 30);
  std::uniform_int_distribution<std::int64_t> rad(0, 500);
  for (int t = 0; t < 20000; ++t) {
    const Surd s(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), rad(rng));
    const Rational x(num(rng), den(rng));
    const double ds = s.to_double();
    const double dx = x.to_double();
    if (std::abs(ds - dx) < 1e-9) continue;  // exact ties are checked separately
    EXPECT_EQ((s <=> x) < 0, ds < dx) << s.str() << " vs " << x.str();
  }
}

TEST(Surd, ExactTies) {
  const Surd five = window_radical(11) + Rational(5, 4);
  EXPECT_TRUE((five <=> Rational(5)) == 0);
  EXPECT_TRUE(five == Rational(5));
  const Surd s = window_radical(3) + Rational(5, 4);  // ~2.686
  EXPECT_TRUE((s <=> Rational(2)) > 0);
  EXPECT_TRUE((s <=> Rational(3)) < 0);
}

TEST(Surd, Arithmetic) {
  const Surd s = Rational(25, 4) - window_radical(89);  // 3*89/2 - 39/16 = 2097/16
  EXPECT_NEAR(s.to_double(), 6.25 - std::sqrt(2097.0 / 16.0), 1e-12);
  EXPECT_THROW(Surd::sqrt_of(Rational(-1)), Error);
}

}  // namespace
}  // namespace ffperm
