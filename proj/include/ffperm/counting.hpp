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

// Counting solutions i of  gamma^{i+1} = i c + d  over windows of integers,
// the extremal count nu_p, and the CRT matching count for periodic functions.

#ifndef FFPERM_COUNTING_HPP_
#define FFPERM_COUNTING_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "ffperm/error.hpp"
#include "ffperm/exact.hpp"
#include "ffperm/gf.hpp"
#include "ffperm/parallel.hpp"

namespace ffperm {

/// gamma^{i+1} = i*c + d for L <= i <= L + M (M + 1 integers).
struct CountQuery {
  FieldCtx field;
  Fe gamma;
  Fe c;
  Fe d;
  std::int64_t L = 0;
  std::int64_t M = 0;
};

/// One pass, one multiply per step. The integer i enters the field as
/// (i mod p) * 1, so i*c + d is advanced by adding c.
inline std::uint64_t count_exp_linear(const CountQuery& qr) {
  const FieldCtx& F = qr.field;
  if (qr.c.v == 0) throw Error(Errc::kZeroC, "c must be nonzero");
  if (qr.L < 0 || qr.M < 0) throw Error(Errc::kBadRange, "window needs L >= 0 and M >= 0");
  Fe power = F.pow(qr.gamma, static_cast<std::uint64_t>(qr.L) + 1);
  Fe linear = F.add(F.mul(F.embed(qr.L), qr.c), qr.d);
  std::uint64_t count = 0;
  for (std::int64_t i = qr.L; i <= qr.L + qr.M; ++i) {
    count += power == linear;
    power = F.mul(power, qr.gamma);
    linear = F.add(linear, qr.c);
  }
  return count;
}

/// sqrt(3M/2 - 39/16) + 5/4.
inline Surd lemma_window_bound(std::int64_t m) {
  if (m < 3) throw Error(Errc::kBadRange, "window bound needs M >= 3");
  return window_radical(m) + Rational(5, 4);
}

/// q/p + sqrt(3p/2 - 39/16) + 1/4.
inline Surd full_range_bound(const FieldCtx& F) {
  return window_radical(F.p()) + (Rational(F.q() / F.p()) + Rational(1, 4));
}

/// |{1 <= i <= q-2 : gamma^{i+1} = i(1 - gamma) + 1}|.
inline std::uint64_t count_full(const FieldCtx& F, Fe gamma) {
  if (gamma == F.one()) throw Error(Errc::kGammaOne, "gamma = 1 is excluded");
  if (F.q() < 3) return 0;
  return count_exp_linear({F, gamma, F.sub(F.one(), gamma), F.one(), 1, F.q() - 3});
}

namespace detail {

// x * b mod p for fixed b with a precomputed quotient estimate (Shoup).
struct FixedMul {
  std::uint64_t b;
  std::uint64_t w;
  std::uint64_t p;

  FixedMul(std::uint32_t b_in, std::uint32_t p_in)
      : b(b_in), w((std::uint64_t{b_in} << 32) / p_in), p(p_in) {}

  std::uint64_t operator()(std::uint64_t x) const {
    const std::uint64_t qhat = (x * w) >> 32;
    const std::uint64_t r = x * b - qhat * p;
    return r >= p ? r - p : r;
  }
};

/// counts[j] = solutions in [1, p-2] for gamma = gammas[j] in F_p.
inline void count_prime_field_batch(std::uint32_t p, std::span<const std::uint32_t> gammas,
                                    std::span<std::uint32_t> counts) {
  constexpr std::size_t kLanes = 8;
  for (std::size_t base = 0; base < gammas.size(); base += kLanes) {
    const std::size_t lanes = std::min(kLanes, gammas.size() - base);
    std::uint64_t power[kLanes] = {};
    std::uint64_t linear[kLanes] = {};
    std::uint64_t step[kLanes] = {};
    std::uint32_t hits[kLanes] = {};
    std::vector<FixedMul> mul;
    mul.reserve(kLanes);
    for (std::size_t l = 0; l < kLanes; ++l) {
      const std::uint32_t g = l < lanes ? gammas[base + l] : 0;
      mul.emplace_back(g, p);
      power[l] = g;
      linear[l] = 1;
      step[l] = (1 + p - g) % p;
    }
    for (std::uint32_t i = 1; i + 2 <= p; ++i) {
      for (std::size_t l = 0; l < kLanes; ++l) {
        power[l] = mul[l](power[l]);
        std::uint64_t s = linear[l] + step[l];
        linear[l] = s >= p ? s - p : s;
        hits[l] += power[l] == linear[l];
      }
    }
    for (std::size_t l = 0; l < lanes; ++l) counts[base + l] = hits[l];
  }
}

inline void require_odd_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::kCompositeP, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(Errc::kEvenCharacteristic, "p must be odd");
}

}  // namespace detail

/// |{1 <= i <= p-2 : gamma^{i+1} = i(1 - gamma) + 1}| in F_p, integer arithmetic only.
inline std::uint32_t count_prime_field(std::uint32_t p, std::uint32_t gamma) {
  detail::require_odd_prime(p);
  if (gamma % p == 1) throw Error(Errc::kGammaOne, "gamma = 1 is excluded");
  const std::uint32_t g = gamma % p;
  std::uint32_t out = 0;
  detail::count_prime_field_batch(p, std::span<const std::uint32_t>(&g, 1), std::span<std::uint32_t>(&out, 1));
  return out;
}

struct NuRow {
  std::uint32_t p = 0;
  std::uint32_t nu = 0;
  std::vector<std::uint32_t> argmax;  // ascending
  Surd bound;                         // sqrt(3p/2 - 39/16) + 5/4
  double ratio_log = 0.0;             // nu / ln p

  bool within_bound() const { return (bound <=> Rational(nu)) >= 0; }
};

/// Max over gamma in F_p \ {1} of the full-range count.
inline NuRow nu_p(std::uint32_t p, unsigned jobs = 1) {
  detail::require_odd_prime(p);
  std::vector<std::uint32_t> gammas;
  gammas.reserve(p - 1);
  for (std::uint32_t g = 0; g < p; ++g) {
    if (g != 1) gammas.push_back(g);
  }
  std::vector<std::uint32_t> counts(gammas.size(), 0);
  constexpr std::size_t kBlock = 64;
  const std::size_t blocks = (gammas.size() + kBlock - 1) / kBlock;
  parallel_for(blocks, jobs, [&](std::size_t b) {
    const std::size_t lo = b * kBlock;
    const std::size_t len = std::min(kBlock, gammas.size() - lo);
    detail::count_prime_field_batch(p, std::span<const std::uint32_t>(gammas).subspan(lo, len),
                                    std::span<std::uint32_t>(counts).subspan(lo, len));
  });
  NuRow row;
  row.p = p;
  row.nu = *std::max_element(counts.begin(), counts.end());
  for (std::size_t j = 0; j < gammas.size(); ++j) {
    if (counts[j] == row.nu) row.argmax.push_back(gammas[j]);
  }
  row.bound = lemma_window_bound(p);
  row.ratio_log = static_cast<double>(row.nu) / std::log(static_cast<double>(p));
  return row;
}

struct ScanReport {
  std::vector<NuRow> rows;
  double max_ratio_log = 0.0;
  std::uint32_t max_ratio_p = 0;
  std::vector<std::uint32_t> violations;  // primes with nu_p above the bound
};

inline std::vector<std::uint32_t> odd_primes_in(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  if (hi < 3 || lo > hi) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (std::uint32_t n = std::max<std::uint32_t>(lo, 3); n <= hi; ++n) {
    if (!composite[n] && n % 2 == 1) out.push_back(n);
  }
  return out;
}

/// nu_p for every odd prime in [p_min, p_max], plus max nu_p / ln p.
inline ScanReport conjecture_scan(std::uint32_t p_min, std::uint32_t p_max, unsigned jobs = 1) {
  ScanReport rep;
  const std::vector<std::uint32_t> primes = odd_primes_in(p_min, p_max);
  rep.rows.resize(primes.size());
  // Largest primes first so dynamic scheduling balances the O(p^2) tail.
  parallel_for(primes.size(), jobs, [&](std::size_t k) {
    const std::size_t idx = primes.size() - 1 - k;
    rep.rows[idx] = nu_p(primes[idx], 1);
  });
  for (const NuRow& r : rep.rows) {
    if (r.ratio_log > rep.max_ratio_log) {
      rep.max_ratio_log = r.ratio_log;
      rep.max_ratio_p = r.p;
    }
    if (!r.within_bound()) rep.violations.push_back(r.p);
  }
  return rep;
}

/// Periodic function i -> values[i mod n] on the integers.
template <class T>
const T& periodic_at(std::span<const T> values, std::int64_t i) {
  const std::int64_t n = static_cast<std::int64_t>(values.size());
  return values[static_cast<std::size_t>(((i % n) + n) % n)];
}

template <class T>
std::uint64_t crt_direct_count(std::span<const T> g1, std::span<const T> g2) {
  const std::int64_t n = static_cast<std::int64_t>(g1.size() * g2.size());
  std::uint64_t count = 0;
  for (std::int64_t i = 1; i <= n; ++i) count += periodic_at(g1, i) == periodic_at(g2, i);
  return count;
}

/// sum_u m1(u) m2(u) over the value multiplicities in one period.
template <class T>
std::uint64_t crt_multiplicity_count(std::span<const T> g1, std::span<const T> g2) {
  std::map<T, std::uint64_t> m1;
  std::map<T, std::uint64_t> m2;
  for (const T& u : g1) ++m1[u];
  for (const T& u : g2) ++m2[u];
  std::uint64_t total = 0;
  for (const auto& [u, c] : m1) {
    if (auto it = m2.find(u); it != m2.end()) total += c * it->second;
  }
  return total;
}

/// |{i in [1, n1 n2] : g1(i) = g2(i)}| for coprime periods, computed both
/// directly and from multiplicities; the two must agree.
template <class T>
std::uint64_t crt_match_count(std::span<const T> g1, std::span<const T> g2) {
  if (g1.empty() || g2.empty() || std::gcd(g1.size(), g2.size()) != 1) {
    throw Error(Errc::kNonCoprimePeriods, "periods must be positive and coprime");
  }
  const std::uint64_t direct = crt_direct_count(g1, g2);
  const std::uint64_t by_mult = crt_multiplicity_count(g1, g2);
  if (direct != by_mult) throw std::logic_error("CRT match count disagrees with multiplicity sum");
  return direct;
}

template <class T>
bool injective_on_period(std::span<const T> g) {
  std::vector<T> v(g.begin(), g.end());
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

struct CrtWindowCheck {
  std::uint64_t count = 0;
  std::uint64_t bound = 0;  // l * min(n1, n2)
  bool injective = false;
  bool holds = true;        // vacuous unless both restrictions are injective
};

/// Matches in [k+1, k + l n1 n2] against the l * min(n1, n2) bound.
template <class T>
CrtWindowCheck crt_window_check(std::span<const T> g1, std::span<const T> g2, std::int64_t k, std::int64_t l) {
  if (g1.empty() || g2.empty() || std::gcd(g1.size(), g2.size()) != 1) {
    throw Error(Errc::kNonCoprimePeriods, "periods must be positive and coprime");
  }
  if (l < 0) throw Error(Errc::kBadRange, "l must be non-negative");
  CrtWindowCheck out;
  const std::int64_t span = l * static_cast<std::int64_t>(g1.size() * g2.size());
  for (std::int64_t i = k + 1; i <= k + span; ++i) out.count += periodic_at(g1, i) == periodic_at(g2, i);
  out.bound = static_cast<std::uint64_t>(l) * std::min(g1.size(), g2.size());
  out.injective = injective_on_period(g1) && injective_on_period(g2);
  out.holds = !out.injective || out.count <= out.bound;
  return out;
}

}  // namespace ffperm

#endif  // FFPERM_COUNTING_HPP_
