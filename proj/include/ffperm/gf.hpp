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

// Arithmetic in F_q, q = p^n.
//
// An element is stored as the packed index  c_0 + c_1 p + ... + c_{n-1} p^{n-1}
// of its coefficient vector over the polynomial basis 1, x, ..., x^{n-1}
// modulo the field's irreducible modulus. Consequently
//   - the enumeration 0, 1, ..., q-1 of indices is the lexicographic order of
//     coefficient vectors read from c_{n-1} down to c_0, and
//   - the prime subfield F_p is exactly the indices 0, ..., p-1.
//
// Multiplication, inversion and powering go through discrete log / antilog
// tables built from the primitive element; addition in extension fields goes
// through Zech logarithms. The tables are built once per field and shared by
// every copy of the FieldCtx handle.

#ifndef FFPERM_GF_HPP_
#define FFPERM_GF_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffperm/error.hpp"

namespace ffperm {

/// A field element: packed coefficient vector, meaningful only with its FieldCtx.
struct Fe {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Fe, Fe) = default;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

/// Largest field order for which tables are built.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 21;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    e >>= 1;
  }
  return r;
}

/// Deterministic trial division.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

/// Distinct prime factors, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomials over F_p, low-to-high, used for modulus handling and for
// building the log tables. Kept separate from Poly, which models maps F_q -> F_q.
using PolyFp = std::vector<std::uint32_t>;

inline void trim(PolyFp& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(powmod_u64(a, p - 2, p));
}

/// r = a mod m, m monic or at least with invertible leading coefficient.
inline PolyFp polymod(PolyFp a, const PolyFp& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() > dm && !a.empty()) {
    const std::uint64_t c = mulmod_u64(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - (c * m[i]) % p) % p);
    }
    trim(a);
  }
  return a;
}

inline PolyFp mulmod_poly(const PolyFp& a, const PolyFp& b, const PolyFp& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PolyFp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return polymod(std::move(r), m, p);
}

inline PolyFp powmod_poly(PolyFp base, std::uint64_t e, const PolyFp& m, std::uint32_t p) {
  PolyFp r{1};
  r = polymod(r, m, p);
  base = polymod(std::move(base), m, p);
  while (e != 0) {
    if (e & 1) r = mulmod_poly(r, base, m, p);
    base = mulmod_poly(base, base, m, p);
    e >>= 1;
  }
  return r;
}

inline PolyFp gcd_poly(PolyFp a, PolyFp b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyFp r = polymod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Rabin's test: f of degree n is irreducible over F_p iff x^{p^n} = x mod f
/// and gcd(x^{p^{n/r}} - x, f) = 1 for every prime r | n.
inline bool is_irreducible(const PolyFp& f_in, std::uint32_t p) {
  PolyFp f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  auto x_pow_p_k = [&](std::size_t k) {
    PolyFp r{0, 1};
    for (std::size_t i = 0; i < k; ++i) r = powmod_poly(r, p, f, p);
    return r;
  };
  auto minus_x = [&](PolyFp g) {
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    return g;
  };
  if (!minus_x(x_pow_p_k(n)).empty()) return false;
  for (std::uint64_t r : prime_factors(n)) {
    PolyFp g = gcd_poly(f, minus_x(x_pow_p_k(n / r)), p);
    if (g.size() != 1) return false;
  }
  return true;
}

/// True if f has a root in F_p (used as the low-degree cross-check).
inline bool has_root(const PolyFp& f, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  PolyFp modulus;
  std::uint32_t primitive = 0;
  std::vector<std::uint64_t> order_factors;  // distinct primes of q - 1
  std::vector<std::uint32_t> exp;            // exp[k] = alpha^k, k in [0, 2(q-1))
  std::vector<std::uint32_t> log;            // log[a], a != 0
  std::vector<std::uint32_t> neg;            // additive inverse
  std::vector<std::int64_t> zech;            // log(1 + alpha^k) or -1 when 1 + alpha^k = 0
  std::vector<std::uint32_t> pw;             // p^i
};

inline PolyFp unpack(std::uint32_t v, const FieldData& d) {
  PolyFp c(d.n, 0);
  for (std::uint32_t i = 0; i < d.n; ++i) {
    c[i] = v % d.p;
    v /= d.p;
  }
  trim(c);
  return c;
}

inline std::uint32_t pack(const PolyFp& c, const FieldData& d) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * d.p + c[i];
  return v;
}

/// Digit-wise addition of packed indices. Only used while building tables.
inline std::uint32_t add_packed(std::uint32_t a, std::uint32_t b, const FieldData& d) {
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < d.n; ++i) {
    out += ((a % d.p + b % d.p) % d.p) * d.pw[i];
    a /= d.p;
    b /= d.p;
  }
  return out;
}

}  // namespace detail

/// Handle to an immutable finite field. Cheap to copy; copies share tables.
class FieldCtx {
 public:
  /// Builds F_{p^n}. Without a modulus, picks the monic irreducible
  /// x^n + c_{n-1}x^{n-1} + ... + c_0 with (c_{n-1}, ..., c_0) lexicographically least.
  static FieldCtx make(std::uint64_t p, std::uint64_t n,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
    if (!detail::is_prime(p)) throw Error(Errc::kCompositeP, std::to_string(p) + " is not prime");
    if (n < 1) throw Error(Errc::kBadRange, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      q *= p;
      if (q > kMaxFieldOrder) {
        throw Error(Errc::kFieldTooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
      }
    }
    auto d = std::make_shared<detail::FieldData>();
    d->p = static_cast<std::uint32_t>(p);
    d->n = static_cast<std::uint32_t>(n);
    d->q = static_cast<std::uint32_t>(q);
    d->pw.resize(n + 1);
    d->pw[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) d->pw[i] = d->pw[i - 1] * d->p;

    if (modulus) {
      detail::PolyFp m = *modulus;
      for (auto c : m) {
        if (c >= p) throw Error(Errc::kReducibleModulus, "modulus coefficient out of range");
      }
      if (m.size() != n + 1 || m.back() != 1) {
        throw Error(Errc::kReducibleModulus, "modulus must be monic of degree " + std::to_string(n));
      }
      if (!detail::is_irreducible(m, d->p)) {
        throw Error(Errc::kReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
      }
      d->modulus = std::move(m);
    } else {
      d->modulus = default_modulus(d->p, d->n);
    }
    build_tables(*d);
    return FieldCtx(std::move(d));
  }

  std::uint32_t p() const { return d_->p; }
  std::uint32_t n() const { return d_->n; }
  std::uint32_t q() const { return d_->q; }
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }
  bool is_prime_field() const { return d_->n == 1; }

  /// Least element (in index order) of multiplicative order q - 1.
  Fe primitive() const { return Fe{d_->primitive}; }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }

  /// Element with packed index v; throws if v is not an element of this field.
  Fe element(std::uint64_t v) const {
    if (v >= d_->q) throw Error(Errc::kMixedFields, "index " + std::to_string(v) + " outside F_" + std::to_string(d_->q));
    return Fe{static_cast<std::uint32_t>(v)};
  }

  bool contains(Fe a) const { return a.v < d_->q; }

  /// The integer i viewed in the field as (i mod p) * 1.
  Fe embed(std::int64_t i) const {
    const std::int64_t p = d_->p;
    return Fe{static_cast<std::uint32_t>(((i % p) + p) % p)};
  }

  bool in_prime_field(Fe a) const { return a.v < d_->p; }

  std::vector<std::uint32_t> coeffs(Fe a) const {
    std::vector<std::uint32_t> c(d_->n);
    std::uint32_t v = a.v;
    for (auto& x : c) {
      x = v % d_->p;
      v /= d_->p;
    }
    return c;
  }

  Fe from_coeffs(std::span<const std::int64_t> c) const {
    if (c.size() > d_->n) throw Error(Errc::kMixedFields, "coefficient vector longer than extension degree");
    std::uint32_t v = 0;
    const std::int64_t p = d_->p;
    for (std::size_t i = c.size(); i-- > 0;) {
      v = v * d_->p + static_cast<std::uint32_t>(((c[i] % p) + p) % p);
    }
    return Fe{v};
  }

  Fe add(Fe a, Fe b) const {
    if (d_->n == 1) {
      const std::uint32_t s = a.v + b.v;
      return Fe{s >= d_->p ? s - d_->p : s};
    }
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    const std::uint32_t m = d_->q - 1;
    const std::uint32_t la = d_->log[a.v];
    const std::uint32_t lb = d_->log[b.v];
    const std::uint32_t diff = lb >= la ? lb - la : lb + m - la;
    const std::int64_t z = d_->zech[diff];
    if (z < 0) return Fe{0};
    return Fe{d_->exp[la + static_cast<std::uint32_t>(z)]};
  }

  Fe neg(Fe a) const { return Fe{d_->neg[a.v]}; }
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

  Fe mul(Fe a, Fe b) const {
    if (a.v == 0 || b.v == 0) return Fe{0};
    if (d_->n == 1) return Fe{static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % d_->p)};
    return Fe{d_->exp[d_->log[a.v] + d_->log[b.v]]};
  }

  /// a^{q-2}: the inverse of a nonzero a, and 0 at 0.
  Fe inv0(Fe a) const {
    if (a.v == 0) return Fe{0};
    const std::uint32_t l = d_->log[a.v];
    return Fe{d_->exp[l == 0 ? 0 : d_->q - 1 - l]};
  }

  Fe div(Fe a, Fe b) const {
    if (b.v == 0) throw Error(Errc::kZeroElement, "division by zero");
    return mul(a, inv0(b));
  }

  /// a^e with 0^0 = 1.
  Fe pow(Fe a, std::uint64_t e) const {
    if (e == 0) return Fe{1};
    if (a.v == 0) return Fe{0};
    const std::uint64_t m = d_->q - 1;
    return Fe{d_->exp[(std::uint64_t{d_->log[a.v]} * (e % m)) % m]};
  }

  /// alpha^k for the cached primitive alpha.
  Fe exp(std::uint64_t k) const { return Fe{d_->exp[k % (d_->q - 1)]}; }

  /// Discrete log to base primitive(); a must be nonzero.
  std::uint32_t log(Fe a) const {
    if (a.v == 0) throw Error(Errc::kZeroElement, "log of zero");
    return d_->log[a.v];
  }

  /// Multiplicative order, by descending through the prime factors of q - 1.
  std::uint64_t order(Fe a) const {
    if (a.v == 0) throw Error(Errc::kZeroElement, "order of zero");
    std::uint64_t l = d_->q - 1;
    for (std::uint64_t r : d_->order_factors) {
      while (l % r == 0 && pow(a, l / r) == one()) l /= r;
    }
    return l;
  }

  /// Same field if the same tables, or the same (p, n, modulus).
  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->n == b.d_->n && a.d_->modulus == b.d_->modulus);
  }

 private:
  explicit FieldCtx(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}

  static detail::PolyFp default_modulus(std::uint32_t p, std::uint32_t n) {
    if (n == 1) return {0, 1};
    // Enumerate (c_{n-1}, ..., c_0) lexicographically: c_0 is the fastest digit.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < n; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      detail::PolyFp m(n + 1, 0);
      std::uint64_t v = t;
      for (std::uint32_t i = 0; i < n; ++i) {
        m[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      m[n] = 1;
      if (m[0] == 0) continue;
      if (detail::is_irreducible(m, p)) return m;
    }
    throw Error(Errc::kReducibleModulus, "no irreducible polynomial found");  // unreachable
  }

  static void build_tables(detail::FieldData& d) {
    const std::uint32_t q = d.q;
    const std::uint64_t m = q - 1;
    d.order_factors = detail::prime_factors(m);

    auto mul_basis = [&](std::uint32_t a, std::uint32_t b) {
      if (d.n == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % d.p);
      return detail::pack(detail::mulmod_poly(detail::unpack(a, d), detail::unpack(b, d), d.modulus, d.p), d);
    };
    auto pow_basis = [&](std::uint32_t a, std::uint64_t e) {
      if (d.n == 1) return static_cast<std::uint32_t>(detail::powmod_u64(a, e, d.p));
      return detail::pack(detail::powmod_poly(detail::unpack(a, d), e, d.modulus, d.p), d);
    };

    d.primitive = 0;
    for (std::uint32_t c = 1; c < q; ++c) {
      bool ok = true;
      for (std::uint64_t r : d.order_factors) {
        if (pow_basis(c, m / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        d.primitive = c;
        break;
      }
    }

    d.exp.assign(2 * m, 0);
    d.log.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint64_t k = 0; k < m; ++k) {
      d.exp[k] = x;
      d.exp[k + m] = x;
      d.log[x] = static_cast<std::uint32_t>(k);
      x = mul_basis(x, d.primitive);
    }

    d.neg.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      std::uint32_t out = 0;
      std::uint32_t v = a;
      for (std::uint32_t i = 0; i < d.n; ++i) {
        const std::uint32_t c = v % d.p;
        out += ((d.p - c) % d.p) * d.pw[i];
        v /= d.p;
      }
      d.neg[a] = out;
    }

    if (d.n > 1) {
      d.zech.assign(m, -1);
      for (std::uint64_t k = 0; k < m; ++k) {
        const std::uint32_t s = detail::add_packed(1, d.exp[k], d);
        d.zech[k] = s == 0 ? -1 : static_cast<std::int64_t>(d.log[s]);
      }
    }
  }

  std::shared_ptr<const detail::FieldData> d_;
};

/// make_field(p, n, modulus) -> FieldCtx. Modulus is low-to-high and monic.
inline FieldCtx make_field(std::uint64_t p, std::uint64_t n = 1,
                           std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
  return FieldCtx::make(p, n, std::move(modulus));
}

/// binom(m, k) mod p by Lucas: product of digit-wise binomials in base p.
inline std::uint32_t lucas_binom(std::int64_t m, std::int64_t k, std::uint32_t p) {
  if (k < 0 || k > m) throw Error(Errc::kBadRange, "lucas_binom needs 0 <= k <= m");
  if (!detail::is_prime(p)) throw Error(Errc::kCompositeP, std::to_string(p) + " is not prime");
  std::uint64_t result = 1;
  while (m > 0 || k > 0) {
    const std::uint64_t mi = static_cast<std::uint64_t>(m % p);
    const std::uint64_t ki = static_cast<std::uint64_t>(k % p);
    if (ki > mi) return 0;
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::uint64_t j = 0; j < ki; ++j) {
      num = num * ((mi - j) % p) % p;
      den = den * ((j + 1) % p) % p;
    }
    result = result * num % p * detail::powmod_u64(den, p - 2, p) % p;
    m /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace ffperm

#endif  // FFPERM_GF_HPP_
