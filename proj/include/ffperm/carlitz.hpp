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

// Carlitz chains
//
//   P_n(x) = (...((a_0 x + a_1)^{q-2} + a_2)^{q-2} ... + a_n)^{q-2} + a_{n+1}
//
// with a_0, a_2, ..., a_n nonzero, their Moebius convergents and pole sets,
// the closed-form coefficients of length-2 chains, rank detection up to 2,
// and the weight / rank bounds for small Carlitz rank.

#ifndef FFPERM_CARLITZ_HPP_
#define FFPERM_CARLITZ_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ffperm/error.hpp"
#include "ffperm/exact.hpp"
#include "ffperm/gf.hpp"
#include "ffperm/poly.hpp"

namespace ffperm {

inline constexpr std::uint32_t kDefaultQCap = 343;

namespace detail {
inline void require_odd(const FieldCtx& F) {
  if (F.p() == 2) throw Error(Errc::kEvenCharacteristic, "operation assumes odd characteristic");
}
}  // namespace detail

class Chain {
 public:
  /// a = (a_0, a_1, ..., a_{n+1}); n = a.size() - 2.
  Chain(FieldCtx field, std::vector<Fe> a) : field_(std::move(field)), a_(std::move(a)) {
    if (a_.size() < 2) throw Error(Errc::kBadChain, "a chain needs at least (a_0, a_1)");
    for (Fe c : a_) {
      if (!field_.contains(c)) throw Error(Errc::kBadChain, "chain parameter outside field");
    }
    if (a_[0].v == 0) throw Error(Errc::kBadChain, "a_0 must be nonzero");
    for (std::size_t k = 2; k + 1 < a_.size(); ++k) {
      if (a_[k].v == 0) throw Error(Errc::kBadChain, "a_" + std::to_string(k) + " must be nonzero");
    }
  }

  const FieldCtx& field() const { return field_; }
  /// Number of inversions.
  std::size_t length() const { return a_.size() - 2; }
  const std::vector<Fe>& params() const { return a_; }
  Fe operator[](std::size_t k) const { return a_.at(k); }

  /// The composed map at a single point.
  Fe operator()(Fe x) const {
    const FieldCtx& F = field_;
    Fe v = F.add(F.mul(a_[0], x), a_[1]);
    for (std::size_t k = 2; k < a_.size(); ++k) v = F.add(F.inv0(v), a_[k]);
    return v;
  }

  friend bool operator==(const Chain& a, const Chain& b) { return a.field_ == b.field_ && a.a_ == b.a_; }

 private:
  FieldCtx field_;
  std::vector<Fe> a_;
};

inline ValueTable chain_table(const Chain& ch) {
  const FieldCtx& F = ch.field();
  ValueTable t{F, std::vector<Fe>(F.q())};
  for (std::uint32_t x = 0; x < F.q(); ++x) t.values[x] = ch(Fe{x});
  return t;
}

/// Reduced polynomial of the chain, via its value table and interpolation.
inline Poly expand_chain(const Chain& ch) { return interpolate(chain_table(ch)); }

/// Same polynomial, by repeated powering and reduction modulo x^q - x.
inline Poly expand_chain_symbolic(const Chain& ch) {
  const FieldCtx& F = ch.field();
  Poly g = Poly::monomial(F, ch[0], 1) + Poly::monomial(F, ch[1], 0);
  for (std::size_t k = 2; k < ch.params().size(); ++k) {
    g = pow(g, F.q() - 2) + Poly::monomial(F, ch[k], 0);
  }
  return g;
}

/// A point of P^1(F_q).
struct Infinity {
  friend constexpr bool operator==(Infinity, Infinity) = default;
};
using ProjectivePoint = std::variant<Fe, Infinity>;

class PoleSet {
 public:
  PoleSet() = default;
  explicit PoleSet(std::vector<ProjectivePoint> poles) : poles_(std::move(poles)) {}

  const std::vector<ProjectivePoint>& points() const { return poles_; }
  std::size_t size() const { return poles_.size(); }

  bool contains(Fe x) const {
    for (const auto& p : poles_) {
      if (const Fe* f = std::get_if<Fe>(&p); f && *f == x) return true;
    }
    return false;
  }
  bool contains_infinity() const {
    for (const auto& p : poles_) {
      if (std::holds_alternative<Infinity>(p)) return true;
    }
    return false;
  }

 private:
  std::vector<ProjectivePoint> poles_;
};

/// (num_x * x + num_c) / (den_x * x + den_c).
struct MobiusMap {
  FieldCtx field;
  Fe num_x, num_c, den_x, den_c;

  /// nullopt where the denominator vanishes.
  std::optional<Fe> operator()(Fe x) const {
    const FieldCtx& F = field;
    const Fe den = F.add(F.mul(den_x, x), den_c);
    if (den.v == 0) return std::nullopt;
    return F.mul(F.add(F.mul(num_x, x), num_c), F.inv0(den));
  }

  Fe determinant() const { return field.sub(field.mul(num_x, den_c), field.mul(den_x, num_c)); }
};

struct Convergent {
  MobiusMap map;
  PoleSet poles;
};

/// R_n and O_n from alpha_k = alpha_{k-1} a_k + alpha_{k-2}, beta likewise,
/// alpha_0 = 0, alpha_1 = a_0, beta_0 = 1, beta_1 = a_1.
inline Convergent convergents(const Chain& ch) {
  const std::size_t n = ch.length();
  if (n < 1) throw Error(Errc::kBadChain, "convergents need at least one inversion");
  const FieldCtx& F = ch.field();
  std::vector<Fe> alpha(n + 2), beta(n + 2);
  alpha[0] = F.zero();
  alpha[1] = ch[0];
  beta[0] = F.one();
  beta[1] = ch[1];
  for (std::size_t k = 2; k <= n + 1; ++k) {
    alpha[k] = F.add(F.mul(alpha[k - 1], ch[k]), alpha[k - 2]);
    beta[k] = F.add(F.mul(beta[k - 1], ch[k]), beta[k - 2]);
  }
  std::vector<ProjectivePoint> poles;
  for (std::size_t i = 1; i <= n; ++i) {
    if (alpha[i].v == 0) poles.emplace_back(Infinity{});
    else poles.emplace_back(F.neg(F.div(beta[i], alpha[i])));
  }
  MobiusMap m{F, alpha[n + 1], beta[n + 1], alpha[n], beta[n]};
  if ((m.den_x.v == 0 && m.den_c.v == 0) || (m.num_x.v == 0 && m.num_c.v == 0) || m.determinant().v == 0) {
    throw Error(Errc::kBadChain, "degenerate convergent");
  }
  return {m, PoleSet(std::move(poles))};
}

/// True iff the table agrees with R_n at every finite point off the pole set.
inline bool agreement_check(const Chain& ch, const ValueTable& table) {
  const Convergent c = convergents(ch);
  const FieldCtx& F = ch.field();
  for (std::uint32_t x = 0; x < F.q(); ++x) {
    if (c.poles.contains(Fe{x})) continue;
    const auto r = c.map(Fe{x});
    if (!r || *r != table.values[x]) return false;
  }
  return true;
}

inline bool agreement_check(const Chain& ch) { return agreement_check(ch, eval_table(expand_chain(ch))); }

/// Constant term c of the length-2 closed form.
inline Fe rank2_constant(const FieldCtx& F, Fe a1, Fe a2, Fe a3) {
  const std::uint32_t q = F.q();
  const Fe inv_a2 = F.inv0(a2);
  const Fe eta = F.add(a1, inv_a2);
  const Fe bracket = F.sub(F.add(F.mul(a1, F.pow(eta, q - 2)), F.one()), F.pow(a1, q - 1));
  return F.add(a3, F.mul(inv_a2, bracket));
}

/// Closed-form coefficients of ((a0 x + a1)^{q-2} + a2)^{q-2} + a3:
///
///   c + a2^{-1} sum_{i=1}^{q-2} (-a0)^i [(a1 - i a2^{-1}) eta^{q-2-i} - a1^{q-1-i}] x^i
///
/// with eta = a1 + a2^{-1} and 0^0 = 1. When eta = 0 the i = q-2 term keeps
/// the factor eta^0 = 1, which is what makes the coefficient of x^{q-2} nonzero.
inline Poly rank2_coeffs(const FieldCtx& F, Fe a0, Fe a1, Fe a2, Fe a3) {
  if (a0.v == 0) throw Error(Errc::kBadParam, "a0 must be nonzero");
  if (a2.v == 0) throw Error(Errc::kBadParam, "a2 must be nonzero");
  const std::uint32_t q = F.q();
  const Fe inv_a2 = F.inv0(a2);
  const Fe eta = F.add(a1, inv_a2);
  const Fe minus_a0 = F.neg(a0);
  std::vector<Fe> c(q, Fe{0});
  c[0] = rank2_constant(F, a1, a2, a3);
  Fe sign_pow = F.one();
  for (std::uint32_t i = 1; i + 2 <= q; ++i) {
    sign_pow = F.mul(sign_pow, minus_a0);
    const Fe lin = F.sub(a1, F.mul(F.embed(i), inv_a2));
    const Fe bracket = F.sub(F.mul(lin, F.pow(eta, q - 2 - i)), F.pow(a1, q - 1 - i));
    c[i] = F.mul(inv_a2, F.mul(sign_pow, bracket));
  }
  return Poly(F, std::move(c));
}

/// g(x) = f(a0^{-1} x) for the length-2 chain, by its three branches.
inline Fe rank2_piecewise_eval(const FieldCtx& F, Fe a1, Fe a2, Fe a3, Fe x) {
  if (a2.v == 0) throw Error(Errc::kBadParam, "a2 must be nonzero");
  const Fe inv_a2 = F.inv0(a2);
  const Fe pole1 = F.neg(a1);
  const Fe pole2 = F.neg(F.add(a1, inv_a2));
  if (x == pole1) return F.add(inv_a2, a3);
  if (x == pole2) return a3;
  const Fe num = F.add(x, a1);
  const Fe den = F.add(F.add(F.mul(a2, x), F.mul(a1, a2)), F.one());
  return F.add(F.div(num, den), a3);
}

enum class Rank1WeightClass {
  kMonomial,             // a1 = 0, a2 = 0: weight 1
  kMonomialPlusConstant, // a1 = 0, a2 != 0: weight 2
  kReducedFull,          // a1 != 0, a2 = -a1^{q-2}: weight q - q/p - 1
  kFull,                 // otherwise: weight q - q/p
};

inline std::string_view to_string(Rank1WeightClass c) {
  switch (c) {
    case Rank1WeightClass::kMonomial: return "1";
    case Rank1WeightClass::kMonomialPlusConstant: return "2";
    case Rank1WeightClass::kReducedFull: return "q-q/p-1";
    case Rank1WeightClass::kFull: return "q-q/p";
  }
  return "?";
}

struct Rank1Expansion {
  Poly poly;
  Rank1WeightClass weight_class;
  std::size_t predicted_weight;
};

/// (a0 x + a1)^{q-2} + a2 expanded by the binomial theorem, with the
/// binomials binom(q-2, i) reduced by Lucas, and its weight class.
inline Rank1Expansion rank1_weight(const FieldCtx& F, Fe a0, Fe a1, Fe a2) {
  detail::require_odd(F);
  if (a0.v == 0) throw Error(Errc::kBadParam, "a0 must be nonzero");
  const std::uint32_t q = F.q();
  const std::uint32_t p = F.p();
  std::vector<Fe> c(q, Fe{0});
  for (std::uint32_t i = 0; i + 2 <= q; ++i) {
    const Fe b = F.embed(lucas_binom(q - 2, i, p));
    c[i] = F.mul(b, F.mul(F.pow(a0, i), F.pow(a1, q - 2 - i)));
  }
  c[0] = F.add(c[0], a2);
  Poly poly(F, std::move(c));

  Rank1WeightClass cls;
  std::size_t predicted;
  if (a1.v == 0) {
    cls = a2.v == 0 ? Rank1WeightClass::kMonomial : Rank1WeightClass::kMonomialPlusConstant;
    predicted = a2.v == 0 ? 1 : 2;
  } else if (a2 == F.neg(F.pow(a1, q - 2))) {
    cls = Rank1WeightClass::kReducedFull;
    predicted = q - q / p - 1;
  } else {
    cls = Rank1WeightClass::kFull;
    predicted = q - q / p;
  }
  return {std::move(poly), cls, predicted};
}

enum class RankClass { kZero = 0, kOne = 1, kTwo = 2, kMoreThanTwo = 3 };

inline std::string_view to_string(RankClass r) {
  switch (r) {
    case RankClass::kZero: return "0";
    case RankClass::kOne: return "1";
    case RankClass::kTwo: return "2";
    case RankClass::kMoreThanTwo: return ">2";
  }
  return "?";
}

struct RankReport {
  RankClass rank;
  std::optional<Chain> witness;
};

namespace detail {

// Fits h(x) = a0 x + a1 with a0 != 0 to a pointwise map, checking every point.
template <class H>
std::optional<std::pair<Fe, Fe>> fit_linear(const FieldCtx& F, H&& h) {
  const Fe a1 = h(Fe{0});
  const Fe a0 = F.sub(h(Fe{1}), a1);
  if (a0.v == 0) return std::nullopt;
  for (std::uint32_t x = 2; x < F.q(); ++x) {
    if (h(Fe{x}) != F.add(F.mul(a0, Fe{x}), a1)) return std::nullopt;
  }
  return std::make_pair(a0, a1);
}

}  // namespace detail

/// Exact Carlitz rank test for rank <= 2 on a permutation's value table.
///
/// Every chain ends in  f = inv0(h) + a_{n+1}  with h a chain one shorter, and
/// inv0 is an involution, so h = inv0(f - a_{n+1}) is determined by the last
/// constant. Enumerating that constant (and the next one for length 2, which
/// must be nonzero) and fitting the remaining linear map is an exhaustive
/// search over all chains of the given length.
inline RankReport carlitz_rank_upto2(const ValueTable& t) {
  const FieldCtx& F = t.field;
  const std::uint32_t q = F.q();
  if (auto lin = detail::fit_linear(F, [&](Fe x) { return t[x]; })) {
    return {RankClass::kZero, Chain(F, {lin->first, lin->second})};
  }
  for (std::uint32_t c2 = 0; c2 < q; ++c2) {
    auto h = [&](Fe x) { return F.inv0(F.sub(t[x], Fe{c2})); };
    if (auto lin = detail::fit_linear(F, h)) {
      return {RankClass::kOne, Chain(F, {lin->first, lin->second, Fe{c2}})};
    }
  }
  for (std::uint32_t c3 = 0; c3 < q; ++c3) {
    for (std::uint32_t c2 = 1; c2 < q; ++c2) {
      auto h = [&](Fe x) { return F.inv0(F.sub(F.inv0(F.sub(t[x], Fe{c3})), Fe{c2})); };
      if (auto lin = detail::fit_linear(F, h)) {
        return {RankClass::kTwo, Chain(F, {lin->first, lin->second, Fe{c2}, Fe{c3}})};
      }
    }
  }
  return {RankClass::kMoreThanTwo, std::nullopt};
}

/// True iff the map is linear or a single-inversion chain.
inline bool rank_at_most1(const ValueTable& t) {
  const FieldCtx& F = t.field;
  if (detail::fit_linear(F, [&](Fe x) { return t[x]; })) return true;
  for (std::uint32_t c2 = 0; c2 < F.q(); ++c2) {
    if (detail::fit_linear(F, [&](Fe x) { return F.inv0(F.sub(t[x], Fe{c2})); })) return true;
  }
  return false;
}

inline RankReport rank_upto2(const Poly& f, std::uint32_t cap = kDefaultQCap) {
  if (f.field().q() > cap) {
    throw Error(Errc::kFieldTooLarge, "q = " + std::to_string(f.field().q()) + " exceeds cap " + std::to_string(cap));
  }
  ValueTable t = eval_table(f);
  if (!is_permutation(t)) throw Error(Errc::kNotPermutation, "polynomial does not permute F_q");
  return carlitz_rank_upto2(t);
}

/// General rank-2 weight bound q - q/p - sqrt(3p/2 - 39/16) + 1/4.
inline Surd thm_rank2_bound(const FieldCtx& F) {
  detail::require_odd(F);
  const std::int64_t q = F.q();
  const std::int64_t p = F.p();
  return Rational(q - q / p) + Rational(1, 4) - window_radical(p);
}

/// q - q/p - 1 - nu_p: the sharp rank-2 weight bound.
inline std::int64_t cor_rank2_bound(const FieldCtx& F, std::int64_t nu_p) {
  detail::require_odd(F);
  const std::int64_t q = F.q();
  return q - q / F.p() - 1 - nu_p;
}

struct GotBounds {
  Rational crk_lower;     // Crk(f) > q/(w+2) - 1
  Rational weight_lower;  // w(f) > q/(n+1) - 2
};

inline GotBounds got_bounds(std::int64_t weight, std::int64_t q, std::int64_t rank) {
  if (weight < 1 || rank < 1) throw Error(Errc::kBadParam, "weight and rank must be >= 1");
  return {Rational(q, weight + 2) - Rational(1), Rational(q, rank + 1) - Rational(2)};
}

/// The prior weight/rank bound applies to f of degree >= 2 that is not
/// literally c1 + c2 x^{q-2} with c2 != 0.
inline bool got_applicable(const Poly& f) {
  const auto d = f.degree();
  if (!d || *d < 2) return false;
  const std::size_t q = f.field().q();
  if (*d != q - 2) return true;
  for (std::size_t i = 1; i + 2 < q; ++i) {
    if (f.coeff(i).v != 0) return true;
  }
  return false;
}

/// rank >= q - 1 - deg(f). Not defined for rank 0 (no inversion in the chain).
inline bool degree_rank_check(const Poly& f, std::int64_t rank) {
  if (rank < 1) throw Error(Errc::kBadParam, "degree/rank check excludes rank-0 maps");
  const auto d = f.degree();
  if (!d) throw Error(Errc::kBadParam, "zero polynomial has no degree");
  return rank >= static_cast<std::int64_t>(f.field().q()) - 1 - static_cast<std::int64_t>(*d);
}

/// f_n = sum_{i=1}^{11^n - 2} [4^{i+1}(2 - i) - 6^i] x^i over F_{11^n}.
inline Poly example_fn(std::uint32_t n, std::uint32_t cap = 2) {
  if (n < 1 || n > cap) throw Error(Errc::kBadRange, "example_fn needs 1 <= n <= " + std::to_string(cap));
  const FieldCtx F = make_field(11, n);
  const std::uint32_t q = F.q();
  const Fe four = F.embed(4);
  const Fe six = F.embed(6);
  std::vector<Fe> c(q, Fe{0});
  for (std::uint32_t i = 1; i + 2 <= q; ++i) {
    const Fe lhs = F.mul(F.pow(four, i + 1), F.embed(2 - static_cast<std::int64_t>(i)));
    c[i] = F.sub(lhs, F.pow(six, i));
  }
  return Poly(F, std::move(c));
}

/// ((2 - x)^{q-2} + 1)^{q-2} - 8 over F_{11^n}.
inline Chain example_fn_chain(std::uint32_t n, std::uint32_t cap = 2) {
  if (n < 1 || n > cap) throw Error(Errc::kBadRange, "example_fn needs 1 <= n <= " + std::to_string(cap));
  const FieldCtx F = make_field(11, n);
  return Chain(F, {F.embed(-1), F.embed(2), F.embed(1), F.embed(-8)});
}

}  // namespace ffperm

#endif  // FFPERM_CARLITZ_HPP_
