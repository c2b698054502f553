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

// Linear complexity over F_q and the weight identity for s_n = f(alpha^n).

#ifndef FFPERM_LINCOMP_HPP_
#define FFPERM_LINCOMP_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ffperm/carlitz.hpp"
#include "ffperm/error.hpp"
#include "ffperm/gf.hpp"
#include "ffperm/poly.hpp"

namespace ffperm {

/// Length of the shortest LFSR generating s (Berlekamp-Massey).
inline std::size_t berlekamp_massey(const FieldCtx& F, std::span<const Fe> s) {
  if (s.empty()) throw Error(Errc::kEmptySequence, "sequence is empty");
  std::vector<Fe> conn{F.one()};  // C(x)
  std::vector<Fe> prev{F.one()};  // B(x)
  std::size_t lc = 0;
  std::size_t shift = 1;
  Fe prev_disc = F.one();
  for (std::size_t n = 0; n < s.size(); ++n) {
    Fe disc = s[n];
    for (std::size_t i = 1; i <= lc && i < conn.size(); ++i) disc = F.add(disc, F.mul(conn[i], s[n - i]));
    if (disc.v == 0) {
      ++shift;
      continue;
    }
    const Fe coef = F.div(disc, prev_disc);
    std::vector<Fe> next = conn;
    if (next.size() < prev.size() + shift) next.resize(prev.size() + shift, Fe{0});
    for (std::size_t i = 0; i < prev.size(); ++i) next[i + shift] = F.sub(next[i + shift], F.mul(coef, prev[i]));
    if (2 * lc <= n) {
      prev = std::move(conn);
      lc = n + 1 - lc;
      prev_disc = disc;
      shift = 1;
    } else {
      ++shift;
    }
    conn = std::move(next);
  }
  return lc;
}

struct Sequence {
  FieldCtx field;
  std::vector<Fe> terms;
  std::optional<Poly> source;
  Fe alpha;
};

/// s_n = f(alpha^n) for n in [0, periods*(q-1)); alpha defaults to the cached primitive.
inline Sequence make_sequence(const Poly& f, std::size_t periods = 1, std::optional<Fe> alpha = std::nullopt) {
  const FieldCtx& F = f.field();
  const Fe a = alpha.value_or(F.primitive());
  if (!F.contains(a) || a.v == 0) throw Error(Errc::kBadParam, "alpha must be a nonzero element");
  Sequence seq{F, {}, f, a};
  const std::size_t len = periods * (F.q() - 1);
  seq.terms.reserve(len);
  Fe x = F.one();
  for (std::size_t n = 0; n < len; ++n) {
    seq.terms.push_back(f(x));
    x = F.mul(x, a);
  }
  return seq;
}

/// Weight after adding the x^{q-1} coefficient into the constant term; on F_q^*
/// the two monomials coincide.
inline std::size_t folded_weight(const Poly& f) {
  const FieldCtx& F = f.field();
  const std::size_t q = F.q();
  std::size_t w = F.add(f.coeff(0), f.coeff(q - 1)).v != 0;
  for (std::size_t i = 1; i + 1 < q; ++i) w += f.coeff(i).v != 0;
  return w;
}

struct BlahutReport {
  std::size_t lc = 0;
  std::size_t weight = 0;  // folded unless the fold is disabled
  bool equal = false;
};

/// Linear complexity of two periods of f(alpha^n) against the weight of f.
inline BlahutReport blahut_check(const Poly& f, bool fold = true, std::uint32_t cap = kDefaultQCap) {
  const FieldCtx& F = f.field();
  if (F.q() > cap) {
    throw Error(Errc::kFieldTooLarge, "q = " + std::to_string(F.q()) + " exceeds cap " + std::to_string(cap));
  }
  const Sequence seq = make_sequence(f, 2);
  BlahutReport rep;
  rep.lc = berlekamp_massey(F, seq.terms);
  rep.weight = fold ? folded_weight(f) : f.weight();
  rep.equal = rep.lc == rep.weight;
  return rep;
}

}  // namespace ffperm

#endif  // FFPERM_LINCOMP_HPP_
