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

// Polynomials over F_q taken modulo x^q - x, i.e. as maps F_q -> F_q.
//
// A Poly is always stored densely with exactly q coefficients (x^0 .. x^{q-1}).
// Reduction folds exponent e > 0 to ((e - 1) mod (q - 1)) + 1, so x^{q-1} stays
// distinct from the constant 1: the two maps differ at 0.

#ifndef FFPERM_POLY_HPP_
#define FFPERM_POLY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ffperm/error.hpp"
#include "ffperm/gf.hpp"

namespace ffperm {

/// Exponent e of x^e after reduction modulo x^q - x.
inline std::size_t fold_exponent(std::uint64_t e, std::uint32_t q) {
  if (e == 0) return 0;
  return static_cast<std::size_t>((e - 1) % (q - 1) + 1);
}

/// Values of a map F_q -> F_q, indexed by the packed element index 0..q-1.
struct ValueTable {
  FieldCtx field;
  std::vector<Fe> values;

  Fe operator[](Fe x) const { return values[x.v]; }
  friend bool operator==(const ValueTable& a, const ValueTable& b) {
    return a.field == b.field && a.values == b.values;
  }
};

class Poly {
 public:
  explicit Poly(FieldCtx field) : field_(std::move(field)), coeffs_(field_.q(), Fe{0}) {}

  /// Coefficients low-to-high. Longer inputs are folded modulo x^q - x.
  Poly(FieldCtx field, std::vector<Fe> coeffs) : field_(std::move(field)) {
    const std::uint32_t q = field_.q();
    for (Fe c : coeffs) {
      if (!field_.contains(c)) throw Error(Errc::kMixedFields, "coefficient outside F_" + std::to_string(q));
    }
    if (coeffs.size() <= q) {
      coeffs.resize(q, Fe{0});
      coeffs_ = std::move(coeffs);
      return;
    }
    coeffs_.assign(q, Fe{0});
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
      const std::size_t k = fold_exponent(e, q);
      coeffs_[k] = field_.add(coeffs_[k], coeffs[e]);
    }
  }

  static Poly monomial(const FieldCtx& field, Fe c, std::uint64_t e) {
    Poly out(field);
    out.coeffs_[fold_exponent(e, field.q())] = c;
    return out;
  }

  const FieldCtx& field() const { return field_; }
  std::span<const Fe> coeffs() const { return coeffs_; }
  Fe coeff(std::size_t i) const { return coeffs_.at(i); }
  void set_coeff(std::size_t i, Fe c) {
    if (!field_.contains(c)) throw Error(Errc::kMixedFields, "coefficient outside field");
    coeffs_.at(i) = c;
  }

  /// Number of nonzero coefficients of the reduced form.
  std::size_t weight() const {
    std::size_t w = 0;
    for (Fe c : coeffs_) w += c.v != 0;
    return w;
  }

  /// Largest index with a nonzero coefficient; nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i].v != 0) return i;
    }
    return std::nullopt;
  }

  /// Horner evaluation.
  Fe operator()(Fe x) const {
    Fe acc{0};
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[i]);
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  FieldCtx field_;
  std::vector<Fe> coeffs_;
};

namespace detail {
inline void require_same(const FieldCtx& a, const FieldCtx& b) {
  if (!(a == b)) throw Error(Errc::kMixedFields, "operands live in different fields");
}
}  // namespace detail

struct Term {
  std::uint64_t exponent = 0;
  Fe coeff;
};

/// Folds a sparse exponent/coefficient list into the reduced dense form.
inline Poly reduce_mod_xq_x(const FieldCtx& field, std::span<const Term> terms) {
  std::vector<Fe> c(field.q(), Fe{0});
  for (const Term& t : terms) {
    if (!field.contains(t.coeff)) throw Error(Errc::kMixedFields, "term coefficient outside field");
    const std::size_t k = fold_exponent(t.exponent, field.q());
    c[k] = field.add(c[k], t.coeff);
  }
  return Poly(field, std::move(c));
}

inline Poly operator+(const Poly& a, const Poly& b) {
  detail::require_same(a.field(), b.field());
  const FieldCtx& F = a.field();
  std::vector<Fe> c(F.q());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(c));
}

inline Poly operator-(const Poly& a, const Poly& b) {
  detail::require_same(a.field(), b.field());
  const FieldCtx& F = a.field();
  std::vector<Fe> c(F.q());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(c));
}

inline Poly scale(Fe s, const Poly& a) {
  const FieldCtx& F = a.field();
  std::vector<Fe> c(F.q());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.mul(s, a.coeff(i));
  return Poly(F, std::move(c));
}

/// Schoolbook product reduced modulo x^q - x.
inline Poly operator*(const Poly& a, const Poly& b) {
  detail::require_same(a.field(), b.field());
  const FieldCtx& F = a.field();
  const std::size_t q = F.q();
  std::vector<Fe> c(q, Fe{0});
  for (std::size_t i = 0; i < q; ++i) {
    if (a.coeff(i).v == 0) continue;
    for (std::size_t j = 0; j < q; ++j) {
      if (b.coeff(j).v == 0) continue;
      const std::size_t k = fold_exponent(i + j, F.q());
      c[k] = F.add(c[k], F.mul(a.coeff(i), b.coeff(j)));
    }
  }
  return Poly(F, std::move(c));
}

/// f^e modulo x^q - x by square-and-multiply.
inline Poly pow(Poly base, std::uint64_t e) {
  const FieldCtx F = base.field();
  Poly r = Poly::monomial(F, F.one(), 0);
  while (e != 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return r;
}

inline Fe evaluate(const Poly& f, Fe x) {
  if (!f.field().contains(x)) throw Error(Errc::kMixedFields, "evaluation point outside field");
  return f(x);
}

inline ValueTable eval_table(const Poly& f) {
  const FieldCtx& F = f.field();
  ValueTable t{F, std::vector<Fe>(F.q())};
  for (std::uint32_t a = 0; a < F.q(); ++a) t.values[a] = f(Fe{a});
  return t;
}

inline bool is_permutation(const ValueTable& t) {
  std::vector<bool> seen(t.field.q(), false);
  for (Fe v : t.values) {
    if (!t.field.contains(v) || seen[v.v]) return false;
    seen[v.v] = true;
  }
  return t.values.size() == t.field.q();
}

inline bool is_permutation(const Poly& f) { return is_permutation(eval_table(f)); }

/// Interpolant  sum_a f(a) (1 - (x - a)^{q-1}).
///
/// binom(q-1, k) = (-1)^k mod p, so (x - a)^{q-1} = sum_k a^{q-1-k} x^k and the
/// coefficient of x^k (k >= 1) is -sum_a f(a) a^{q-1-k}, with 0^0 = 1. The
/// constant term collapses to f(0).
inline Poly interpolate(const ValueTable& t) {
  const FieldCtx& F = t.field;
  const std::uint32_t q = F.q();
  if (t.values.size() != q) throw Error(Errc::kBadRange, "value table must cover all of F_q");
  const std::uint64_t m = q - 1;
  std::vector<Fe> c(q, Fe{0});
  c[0] = t.values[0];
  // Nonzero points enumerated as alpha^j so that a^e = alpha^{j e}.
  std::vector<Fe> vals(m);
  for (std::uint64_t j = 0; j < m; ++j) vals[j] = t[F.exp(j)];
  for (std::uint64_t k = 1; k < q; ++k) {
    const std::uint64_t e = q - 1 - k;
    Fe s = e == 0 ? t.values[0] : Fe{0};
    std::uint64_t idx = 0;
    for (std::uint64_t j = 0; j < m; ++j) {
      if (vals[j].v != 0) s = F.add(s, F.mul(vals[j], F.exp(idx)));
      idx += e;
      if (idx >= m) idx %= m;
    }
    c[k] = F.neg(s);
  }
  return Poly(F, std::move(c));
}

}  // namespace ffperm

#endif  // FFPERM_POLY_HPP_
