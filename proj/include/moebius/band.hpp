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

// Indecomposable objects of the continuous cluster category: points of the
// open Moebius band {|y - x| < 1} / (x, y) ~ (y + 1, x + 1).

#include <algorithm>
#include <array>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moebius/dyadic.hpp"
#include "moebius/error.hpp"

namespace moebius {

// A point of the plane: one lift of an object.
struct Point {
  Dyadic x;
  Dyadic y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }

  Point flip() const { return {y + 1, x + 1}; }
  Point shift(const Dyadic& d) const { return {x + d, y + d}; }
  unsigned exponent() const { return std::max(x.exp(), y.exp()); }

  std::string to_string() const {
    return "(" + x.to_string() + "," + y.to_string() + ")";
  }
};

class Obj {
 public:
  Obj() = default;

  // Canonical iso class of the point (x, y). The difference y - x is read
  // mod 2, so any lift of the two ends is accepted.
  static Obj normal_form(const Dyadic& x, const Dyadic& y) {
    Dyadic d = y - x;
    d = d - Dyadic((d + 1).half().floor() * 2, 0);  // into [-1, 1)
    if (d == Dyadic(-1))
      throw BandBoundary("(" + x.to_string() + "," + y.to_string() +
                         ") lies on the boundary of the band");
    Dyadic px = x;
    if (d.sign() < 0) {
      px = x + d + 1;
      d = -d;
    }
    Obj o;
    o.delta_ = d;
    o.x_ = d.is_zero() ? mod1(px) : mod2(px);
    return o;
  }
  static Obj normal_form(const Point& p) { return normal_form(p.x, p.y); }

  // The object whose ends are the circle points a and b (a != b mod 2).
  static Obj from_ends(const Dyadic& a, const Dyadic& b) {
    const Dyadic q = lift_into_window(CircleAngle(b), a);
    if (q == a) throw BandBoundary("coincident ends " + a.to_string());
    return normal_form(a, q - 1);
  }

  const Dyadic& x() const { return x_; }
  const Dyadic& delta() const { return delta_; }
  Dyadic y() const { return x_ + delta_; }

  Point canonical() const { return {x_, x_ + delta_}; }
  // The two base representatives; every lift is one of these plus (2k, 2k).
  std::array<Point, 2> base_reps() const {
    const Point r0 = canonical();
    return {r0, r0.flip()};
  }
  unsigned exponent() const { return std::max(x_.exp(), delta_.exp()); }

  friend bool operator==(const Obj&, const Obj&) = default;
  friend auto operator<=>(const Obj& a, const Obj& b) {
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    return a.delta_ <=> b.delta_;
  }

  std::string to_string() const {
    return "M(" + x_.to_string() + "," + y().to_string() + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const Obj& o) {
    return os << o.to_string();
  }

  // "M(x,y)" with dyadic entries; whitespace is ignored.
  static Obj parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ' && c != '\t') s.push_back(c);
    if (s.size() < 5 || s[0] != 'M' || s[1] != '(' || s.back() != ')')
      throw ParseError("expected M(x,y), got '" + std::string(text) + "'");
    const std::string body = s.substr(2, s.size() - 3);
    const auto comma = body.find(',');
    if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos)
      throw ParseError("expected M(x,y), got '" + std::string(text) + "'");
    return normal_form(Dyadic::parse(body.substr(0, comma)),
                       Dyadic::parse(body.substr(comma + 1)));
  }

 private:
  Dyadic x_;
  Dyadic delta_;
};

inline Obj normal_form(const Dyadic& x, const Dyadic& y) {
  return Obj::normal_form(x, y);
}

// Axis-parallel rectangle in the plane of lifts, each edge open or closed.
struct Rect {
  Dyadic x_lo, x_hi, y_lo, y_hi;
  bool open_x_lo = false, open_x_hi = false;
  bool open_y_lo = false, open_y_hi = false;

  static Rect closed(const Dyadic& x_lo, const Dyadic& x_hi, const Dyadic& y_lo,
                     const Dyadic& y_hi) {
    return {x_lo, x_hi, y_lo, y_hi, false, false, false, false};
  }
  static Rect open(const Dyadic& x_lo, const Dyadic& x_hi, const Dyadic& y_lo,
                   const Dyadic& y_hi) {
    return {x_lo, x_hi, y_lo, y_hi, true, true, true, true};
  }

  bool empty() const { return x_hi < x_lo || y_hi < y_lo; }

  bool contains(const Point& p) const {
    auto in = [](const Dyadic& v, const Dyadic& lo, const Dyadic& hi, bool olo,
                 bool ohi) {
      return (olo ? lo < v : lo <= v) && (ohi ? v < hi : v <= hi);
    };
    return in(p.x, x_lo, x_hi, open_x_lo, open_x_hi) &&
           in(p.y, y_lo, y_hi, open_y_lo, open_y_hi);
  }

  unsigned exponent() const {
    return std::max({x_lo.exp(), x_hi.exp(), y_lo.exp(), y_hi.exp()});
  }

  std::string to_string() const {
    return std::string(open_x_lo ? "(" : "[") + x_lo.to_string() + "," +
           x_hi.to_string() + (open_x_hi ? ")" : "]") + "x" +
           (open_y_lo ? "(" : "[") + y_lo.to_string() + "," + y_hi.to_string() +
           (open_y_hi ? ")" : "]");
  }
};

// Hom window of the lift t: s maps nontrivially into t iff
// t.y - 1 < s.x <= t.x and t.x - 1 < s.y <= t.y.
inline bool in_hom_window(const Point& s, const Point& t) {
  return t.y - 1 < s.x && s.x <= t.x && t.x - 1 < s.y && s.y <= t.y;
}

// The lift of X lying in the hom window of t, if any.
inline std::optional<Point> align_source(const Obj& X, const Point& t) {
  for (const Point& r : X.base_reps()) {
    const BigInt k = (t.x - r.x).half().floor();
    const Point s = r.shift(Dyadic(k * 2, 0));
    if (in_hom_window(s, t)) return s;
  }
  return std::nullopt;
}

// The lift t of Y whose hom window contains s, if any.
inline std::optional<Point> align_target(const Point& s, const Obj& Y) {
  for (const Point& r : Y.base_reps()) {
    const BigInt k = (s.x - r.x).half().ceil();
    const Point t = r.shift(Dyadic(k * 2, 0));
    if (in_hom_window(s, t)) return t;
  }
  return std::nullopt;
}

// Lifts (s of X, t of Y) realizing the basic morphism X -> Y, t canonical.
inline std::optional<std::pair<Point, Point>> hom_reps(const Obj& X, const Obj& Y) {
  const Point t = Y.canonical();
  if (auto s = align_source(X, t)) return std::make_pair(*s, t);
  return std::nullopt;
}

inline int hom_c_dim(const Obj& X, const Obj& Y) {
  return hom_reps(X, Y).has_value() ? 1 : 0;
}

// Ends {x, y + 1} mod 2, sorted.
inline std::pair<CircleAngle, CircleAngle> ends(const Obj& X) {
  CircleAngle a(X.x());
  CircleAngle b(X.y() + 1);
  if (b < a) std::swap(a, b);
  return {a, b};
}

inline Dyadic mesh(const std::vector<Obj>& objs) {
  std::set<Dyadic> pts;
  for (const Obj& o : objs) {
    const auto [a, b] = ends(o);
    pts.insert(a.value());
    pts.insert(b.value());
  }
  if (pts.size() < 2) return Dyadic(1);
  Dyadic best = Dyadic(2);
  const Dyadic* prev = nullptr;
  for (const Dyadic& p : pts) {
    if (prev != nullptr) best = std::min(best, p - *prev);
    prev = &p;
  }
  best = std::min(best, *pts.begin() + 2 - *pts.rbegin());
  return best;
}

inline bool compatible(const Obj& X, const Obj& Y) {
  return X == Y || hom_c_dim(X, Y) == 0 || hom_c_dim(Y, X) == 0;
}

// True when the end pairs strictly interleave on the circle.
inline bool ends_cross(const Obj& X, const Obj& Y) {
  const auto [a, b] = ends(X);
  const auto [c, d] = ends(Y);
  if (c == a || c == b || d == a || d == b) return false;
  const bool c_in = a < c && c < b;
  const bool d_in = a < d && d < b;
  return c_in != d_in;
}

enum class TriangleKind { kPositive, kNegative };

// Completes a basic X -> Y to a distinguished triangle X -> Y -> Z -> W and
// returns (Z, W). Positive triangles need lifts (x, y) -> (x, z); negative
// ones (x, y) -> (w, y).
inline std::pair<Obj, Obj> triangle_complete(const Obj& X, const Obj& Y,
                                             TriangleKind kind) {
  for (const Point& p : X.base_reps()) {
    for (const Point& r : Y.base_reps()) {
      const Dyadic gap = kind == TriangleKind::kPositive ? p.x - r.x : p.y - r.y;
      if (!gap.is_integer() || gap.num() % 2 != 0) continue;
      const Point q = r.shift(gap);
      if (kind == TriangleKind::kPositive) {
        // (x, y) -> (x, z) with y < z.
        if (p.y < q.y)
          return {normal_form(p.y + 1, q.y), normal_form(p.y + 1, p.x + 1)};
      } else {
        // (x, y) -> (w, y) with x < w.
        if (p.x < q.x)
          return {normal_form(q.x, p.x + 1), normal_form(p.y + 1, p.x + 1)};
      }
    }
  }
  throw NotBasicAligned(X.to_string() + " -> " + Y.to_string() + " has no " +
                        (kind == TriangleKind::kPositive ? "positive" : "negative") +
                        " alignment");
}

}  // namespace moebius
