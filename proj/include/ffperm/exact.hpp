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

// Exact rationals and single-radical surds a + b*sqrt(r).
//
// Bounds such as sqrt(3M/2 - 39/16) + 5/4 are compared against integer
// solution counts. Doing that in floating point invites epsilon choices
// near perfect squares (M = 11 gives exactly 5), so every comparison here
// reduces to sign checks and squared integer inequalities.

#ifndef FFPERM_EXACT_HPP_
#define FFPERM_EXACT_HPP_

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "ffperm/error.hpp"

namespace ffperm {

using i128 = __int128;

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error(Errc::kBadParam, "rational with zero denominator");
    set(n, d);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(i128{a.num_} * b.den_ + i128{b.num_} * a.den_, i128{a.den_} * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(i128{a.num_} * b.den_ - i128{b.num_} * a.den_, i128{a.den_} * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(i128{a.num_} * b.num_, i128{a.den_} * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(Errc::kBadParam, "rational division by zero");
    return from_wide(i128{a.num_} * b.den_, i128{a.den_} * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const i128 l = i128{a.num_} * b.den_;
    const i128 r = i128{b.num_} * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  int sign() const { return (num_ > 0) - (num_ < 0); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational from_wide(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 a = n < 0 ? -n : n;
    i128 b = d;
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    Rational out;
    out.num_ = static_cast<std::int64_t>(n);
    out.den_ = static_cast<std::int64_t>(d);
    return out;
  }

  void set(std::int64_t n, std::int64_t d) {
    *this = from_wide(n, d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// a + b*sqrt(r), r a square-free non-negative integer after construction.
class Surd {
 public:
  Surd() = default;
  Surd(Rational a, Rational b, std::int64_t r) : a_(a), b_(b), r_(r) {
    if (r < 0) throw Error(Errc::kBadParam, "negative radicand");
    normalize();
  }

  /// sqrt(x) for a non-negative rational x.
  static Surd sqrt_of(const Rational& x) {
    if (x.sign() < 0) throw Error(Errc::kBadParam, "square root of a negative rational");
    // sqrt(n/d) = sqrt(n*d)/d
    return Surd(Rational(0), Rational(1, x.den()), x.num() * x.den());
  }

  const Rational& rational_part() const { return a_; }
  const Rational& coefficient() const { return b_; }
  std::int64_t radicand() const { return r_; }

  double to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(r_));
  }

  std::string str() const {
    std::ostringstream os;
    if (b_.sign() == 0 || r_ == 0) {
      os << a_;
      return os.str();
    }
    if (a_.sign() != 0) os << a_ << (b_.sign() > 0 ? "+" : "-");
    else if (b_.sign() < 0) os << "-";
    const Rational mag = b_.sign() < 0 ? -b_ : b_;
    if (mag.num() != 1) os << mag.num() << "*";
    os << "sqrt(" << r_ << ")";
    if (mag.den() != 1) os << "/" << mag.den();
    return os.str();
  }

  friend Surd operator+(const Surd& s, const Rational& x) { return Surd(s.a_ + x, s.b_, s.r_); }
  friend Surd operator+(const Rational& x, const Surd& s) { return s + x; }
  friend Surd operator-(const Surd& s, const Rational& x) { return Surd(s.a_ - x, s.b_, s.r_); }
  friend Surd operator-(const Rational& x, const Surd& s) { return Surd(x - s.a_, -s.b_, s.r_); }

  /// Exact three-way comparison against a rational.
  friend std::strong_ordering operator<=>(const Surd& s, const Rational& k) {
    // sign of (a + b*sqrt(r)) - k  ==  sign of b*sqrt(r) - d  with d = k - a
    const Rational d = k - s.a_;
    if (s.b_.sign() == 0 || s.r_ == 0) return Rational(0) <=> d;
    const Rational lhs_sq = s.b_ * s.b_ * Rational(s.r_);
    const Rational d_sq = d * d;
    if (s.b_.sign() > 0) {
      if (d.sign() < 0) return std::strong_ordering::greater;
      return lhs_sq <=> d_sq;
    }
    if (d.sign() > 0) return std::strong_ordering::less;
    return d_sq <=> lhs_sq;
  }
  friend bool operator==(const Surd& s, const Rational& k) { return (s <=> k) == 0; }

  friend std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.str(); }

 private:
  void normalize() {
    if (r_ == 0 || b_.sign() == 0) {
      b_ = Rational(0);
      r_ = 0;
      return;
    }
    std::int64_t rest = r_;
    std::int64_t outside = 1;
    for (std::int64_t f = 2; f * f <= rest; ++f) {
      while (rest % (f * f) == 0) {
        rest /= f * f;
        outside *= f;
      }
    }
    b_ = b_ * Rational(outside);
    r_ = rest;
    if (r_ == 1) {
      a_ = a_ + b_;
      b_ = Rational(0);
      r_ = 0;
    }
  }

  Rational a_{0};
  Rational b_{0};
  std::int64_t r_ = 0;
};

/// sqrt(3M/2 - 39/16), the radical shared by the window and rank-2 bounds.
inline Surd window_radical(std::int64_t m) {
  return Surd::sqrt_of(Rational(3 * m, 2) - Rational(39, 16));
}

}  // namespace ffperm

#endif  // FFPERM_EXACT_HPP_
