// Copyright 2026 The Moebius Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/*
 * Exact dyadic rationals num / 2^exp and angles on the circle R mod 2.
 *
 * All angular quantities in this library are measured in units of pi, so the
 * circle of circumference 2*pi becomes R / 2Z. A Dyadic is kept reduced:
 * either num is odd or exp is zero. Every operation is exact; there is no
 * floating point anywhere in the value path.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "moebius/error.hpp"

namespace moebius {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

// Floor division by a positive divisor.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && a < 0) q -= 1;
  return q;
}

}  // namespace detail

class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(int value) : num_(value) {}        // NOLINT(runtime/explicit)
  Dyadic(long long value) : num_(value) {}  // NOLINT(runtime/explicit)
  Dyadic(BigInt num, unsigned exp) : num_(std::move(num)), exp_(exp) {
    normalize();
  }

  // 1 / 2^k.
  static Dyadic inv_pow2(unsigned k) { return Dyadic(BigInt(1), k); }

  const BigInt& num() const { return num_; }
  unsigned exp() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }
  // True when the value is an integer multiple of 1/2^n.
  bool is_multiple_of_inv_pow2(unsigned n) const { return exp_ <= n; }

  Dyadic operator-() const {
    Dyadic r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.exp_ == b.exp_) return Dyadic(a.num_ + b.num_, a.exp_);
    if (a.exp_ > b.exp_)
      return Dyadic(a.num_ + b.num_ * detail::pow2(a.exp_ - b.exp_), a.exp_);
    return Dyadic(a.num_ * detail::pow2(b.exp_ - a.exp_) + b.num_, b.exp_);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
  }
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  Dyadic half() const { return num_ == 0 ? *this : Dyadic(num_, exp_ + 1); }
  Dyadic times_pow2(int k) const {
    if (k >= 0) {
      const auto shift = static_cast<unsigned>(k);
      if (exp_ >= shift) return Dyadic(num_, exp_ - shift);
      return Dyadic(num_ * detail::pow2(shift - exp_), 0);
    }
    return Dyadic(num_, exp_ + static_cast<unsigned>(-k));
  }

  BigInt floor() const { return detail::floor_div(num_, detail::pow2(exp_)); }
  BigInt ceil() const { return -(-*this).floor(); }

  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }
  Dyadic abs() const { return num_ < 0 ? -*this : *this; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    if (a.exp_ == b.exp_) return cmp(a.num_, b.num_);
    if (a.exp_ > b.exp_)
      return cmp(a.num_, b.num_ * detail::pow2(a.exp_ - b.exp_));
    return cmp(a.num_ * detail::pow2(b.exp_ - a.exp_), b.num_);
  }

  Rational to_rational() const {
    return Rational(num_, detail::pow2(exp_));
  }

  // "3/8", "-5/4", "2". The denominator is printed expanded, not as 2^k.
  std::string to_string() const {
    if (exp_ == 0) return num_.str();
    return num_.str() + "/" + detail::pow2(exp_).str();
  }

  // Accepts "p", "p/q" with q a power of two, and "p/2^k".
  static Dyadic parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    auto parse_int = [&](std::string_view s) -> BigInt {
      s = trim(s);
      std::size_t i = 0;
      if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
      if (i == s.size()) throw ParseError("expected an integer in '" + std::string(text) + "'");
      for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
          throw ParseError("expected an integer in '" + std::string(text) + "'");
      if (s[0] == '+') s.remove_prefix(1);
      return BigInt(std::string(s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Dyadic(parse_int(text), 0);
    const BigInt num = parse_int(text.substr(0, slash));
    std::string_view den = trim(text.substr(slash + 1));
    if (den.size() > 2 && den[0] == '2' && den[1] == '^') {
      const BigInt k = parse_int(den.substr(2));
      if (k < 0 || k > 4096) throw ParseError("bad exponent in '" + std::string(text) + "'");
      return Dyadic(num, static_cast<unsigned>(k));
    }
    const BigInt d = parse_int(den);
    if (d <= 0) throw ParseError("nonpositive denominator in '" + std::string(text) + "'");
    if ((d & (d - 1)) != 0)
      throw ParseError("denominator is not a power of two in '" + std::string(text) + "'");
    return Dyadic(num, static_cast<unsigned>(boost::multiprecision::msb(d)));
  }

  friend std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
    return os << d.to_string();
  }

 private:
  static std::strong_ordering cmp(const BigInt& a, const BigInt& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  void normalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    if (exp_ == 0) return;
    const unsigned low = static_cast<unsigned>(boost::multiprecision::lsb(num_ < 0 ? BigInt(-num_) : num_));
    const unsigned shift = low < exp_ ? low : exp_;
    if (shift > 0) {
      num_ /= detail::pow2(shift);
      exp_ -= shift;
    }
  }

  BigInt num_ = 0;
  unsigned exp_ = 0;
};

// Value reduced into [0, 2).
inline Dyadic mod2(const Dyadic& d) {
  const BigInt k = d.half().floor();
  return d - Dyadic(k * 2, 0);
}

// Value reduced into [0, 1).
inline Dyadic mod1(const Dyadic& d) { return d - Dyadic(d.floor(), 0); }

// A point of the circle R mod 2, stored by its representative in [0, 2).
class CircleAngle {
 public:
  CircleAngle() = default;
  explicit CircleAngle(const Dyadic& value) : v_(mod2(value)) {}

  const Dyadic& value() const { return v_; }

  friend bool operator==(const CircleAngle&, const CircleAngle&) = default;
  friend auto operator<=>(const CircleAngle& a, const CircleAngle& b) {
    return a.v_ <=> b.v_;
  }

  std::string to_string() const { return v_.to_string(); }

 private:
  Dyadic v_;
};

// The unique lift a + 2k of the angle with lo <= lift < lo + 2.
inline Dyadic lift_into_window(const CircleAngle& a, const Dyadic& lo) {
  const BigInt k = (lo - a.value()).half().ceil();
  return a.value() + Dyadic(k * 2, 0);
}

}  // namespace moebius
