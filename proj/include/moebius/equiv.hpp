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

// Objects of the quotient by T0 versus finite-length string modules, ray
// extensions of words, and the binary digit encoding of walk tails.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moebius/band.hpp"
#include "moebius/cluster.hpp"
#include "moebius/error.hpp"
#include "moebius/strings.hpp"
#include "moebius/walk.hpp"

namespace moebius {

// The word on the support of X, in walk order. Q-letters run against the
// T-maps of the walk.
inline StringWord obj_to_string(const Obj& X) {
  const Walk& w = walk_of(X);
  StringWord s;
  const std::size_t n = w.vertices.size();
  for (std::size_t i = 1; i + 1 < n; ++i) s.v.push_back(w.vertices[i].pt);
  for (std::size_t i = 1; i + 2 < n; ++i)
    s.letters.push_back(w.forward(i) ? Letter::kInverse : Letter::kDirect);
  return s;
}

namespace detail {

// The T-out-neighbour of an end vertex, taken in the triangle that does not
// contain its neighbour inside the word.
inline ClusterPt attach_vertex(const ClusterPt& end, const ClusterPt& inner) {
  for (const Triangle& t : neighbors(end))
    if (!t.contains(inner)) return t.successor(end);
  throw InvalidWord("no attach vertex at " + end.to_string());
}

// (front attach, back attach).
inline std::pair<ClusterPt, ClusterPt> attach_vertices(const StringWord& w) {
  if (w.size() == 1) {
    const auto out = t_out(w.v[0]);
    return {out[1], out[0]};
  }
  return {attach_vertex(w.v.front(), w.v[1]), attach_vertex(w.v.back(), w.v[w.size() - 2])};
}

inline void require_plain_word(const StringWord& w) {
  if (w.empty()) throw InvalidWord("empty word");
  if (w.ray_front || w.ray_back) throw InvalidWord("word carries ray markers");
  const auto check = validate_word(w);
  if (!check.ok) throw InvalidWord(w.to_string() + ": " + check.violation);
}

// Lift of Y sharing a coordinate with c and related to it by a basic map.
inline Point adjacent_lift(const Point& c, const Obj& Y) {
  std::optional<Point> found;
  for (const Point& r : Y.base_reps()) {
    for (int axis = 0; axis < 2; ++axis) {
      const Dyadic gap = axis == 0 ? c.x - r.x : c.y - r.y;
      if (!gap.is_integer() || gap.num() % 2 != 0) continue;
      const Point t = r.shift(gap);
      if (t == c || !(in_hom_window(c, t) || in_hom_window(t, c))) continue;
      if (found && *found != t) throw InvalidWord("ambiguous lift of " + Y.to_string());
      found = t;
    }
  }
  if (!found) throw InvalidWord("no adjacent lift of " + Y.to_string());
  return *found;
}

}  // namespace detail

inline Obj string_to_obj(const StringWord& w) {
  detail::require_plain_word(w);
  const auto [a, b] = detail::attach_vertices(w);
  std::vector<ClusterPt> chain{a};
  chain.insert(chain.end(), w.v.begin(), w.v.end());
  chain.push_back(b);
  Point cur = object(chain.front()).canonical();
  Dyadic max_x = cur.x, max_y = cur.y;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    cur = detail::adjacent_lift(cur, object(chain[i]));
    max_x = std::max(max_x, cur.x);
    max_y = std::max(max_y, cur.y);
  }
  return Obj::normal_form(max_x, max_y);
}

inline Obj simple_object(const ClusterPt& v) {
  return string_to_obj(StringWord::from_vertices({v}));
}

// The graph map corresponding to the basic morphism X1 -> X2.
inline GraphMap transport_to_strings(const Obj& X1, const Obj& X2) {
  if (hom_ct_dim(X1, X2) != 1)
    throw NoMorphism(X1.to_string() + " -> " + X2.to_string());
  const auto maps = graph_maps(obj_to_string(X1), obj_to_string(X2));
  if (maps.empty()) throw NoMorphism("no graph map for " + X1.to_string() + " -> " + X2.to_string());
  return maps.front();
}

// The objects of the basic morphism corresponding to a graph map w1 -> w2.
inline std::pair<Obj, Obj> transport_to_objects(const StringWord& w1, const StringWord& w2) {
  if (hom_dim_strings(w1, w2) == 0)
    throw NoMorphism(w1.to_string() + " -> " + w2.to_string());
  return {string_to_obj(w1), string_to_obj(w2)};
}

// ---------------------------------------------------------------------------
// Ray extensions.

inline StringWord g_extend(const StringWord& w, unsigned k) {
  detail::require_plain_word(w);
  const auto [fa, ba] = detail::attach_vertices(w);
  auto ray = [&](ClusterPt cur, ClusterPt prev) {
    std::vector<ClusterPt> out{cur};
    for (unsigned i = 0; i < k; ++i) {
      for (const Triangle& t : neighbors(cur)) {
        if (t.contains(prev)) continue;
        prev = cur;
        cur = t.predecessor(cur);  // the Q-arrow leaving cur
        break;
      }
      out.push_back(cur);
    }
    return out;
  };
  const auto front = ray(fa, w.v.front());
  const auto back = ray(ba, w.v.back());
  std::vector<ClusterPt> verts(front.rbegin(), front.rend());
  verts.insert(verts.end(), w.v.begin(), w.v.end());
  verts.insert(verts.end(), back.begin(), back.end());
  StringWord out = StringWord::from_vertices(std::move(verts));
  out.ray_front = out.ray_back = true;
  return out;
}

inline StringWord f_strip(const StringWord& w) {
  const std::size_t n = w.size();
  if (n == 0 || (!w.ray_front && !w.ray_back)) return w;
  std::vector<bool> to_back(n, false), to_front(n, false);
  to_back[n - 1] = w.ray_back;
  for (std::size_t i = n - 1; i-- > 0;)
    to_back[i] = to_back[i + 1] && w.letters[i] == Letter::kDirect;
  to_front[0] = w.ray_front;
  for (std::size_t i = 1; i < n; ++i)
    to_front[i] = to_front[i - 1] && w.letters[i - 1] == Letter::kInverse;
  std::size_t lo = 0, hi = n;
  while (lo < n && to_front[lo]) ++lo;
  while (hi > lo && to_back[hi - 1]) --hi;
  for (std::size_t i = lo; i < hi; ++i)
    if (to_front[i] || to_back[i]) throw Error("Internal", "stripped set is not an end segment");
  return w.slice(lo, hi);
}

// ---------------------------------------------------------------------------
// Digit encoding of tails.

struct DigitPrefix {
  ClusterPt v;
  std::vector<int> digits;

  friend bool operator==(const DigitPrefix&, const DigitPrefix&) = default;

  std::string to_string() const {
    std::string s = v.to_string() + ":";
    for (int d : digits) s += static_cast<char>('0' + d);
    return s;
  }
};

inline Dyadic theta(const ClusterPt& v) { return v.h(); }

// (a_m, b_m) with b_m = b + sum d_i theta / 2^i and a_m = b_m - 1 + theta / 2^m,
// where (a, b) = v.coords().
inline Point digits_to_coords(const DigitPrefix& p) {
  const Point base = p.v.coords();
  const Dyadic th = theta(p.v);
  Dyadic b = base.y;
  for (std::size_t i = 0; i < p.digits.size(); ++i) {
    if (p.digits[i] != 0 && p.digits[i] != 1) throw ParseError("digits must be 0 or 1");
    if (p.digits[i] == 1) b += th.times_pow2(-static_cast<int>(i + 1));
  }
  return {b - 1 + th.times_pow2(-static_cast<int>(p.digits.size())), b};
}

inline DigitPrefix coords_to_digits(const ClusterPt& v, const ClusterPt& w, unsigned bound) {
  auto fail = [&] {
    return Unreachable(w.to_string() + " from " + v.to_string() + " within " +
                       std::to_string(bound) + " digits");
  };
  if (w.n < v.n || w.n - v.n > bound) throw fail();
  const unsigned len = w.n - v.n;
  const Point base = v.coords();
  const Dyadic th = theta(v);
  const Point wc = w.coords();
  const BigInt k = (base.y - wc.y).half().ceil();
  const Dyadic bw = wc.y + Dyadic(k * 2, 0);
  if (!(bw < base.y + th)) throw fail();
  const BigInt code = (bw - base.y).times_pow2(static_cast<int>(w.n)).floor();
  DigitPrefix p{v, {}};
  for (unsigned i = 0; i < len; ++i)
    p.digits.push_back(bit_test(code, len - 1 - i) ? 1 : 0);
  if (classify_point(digits_to_coords(p)) != w) throw fail();
  return p;
}

// An eventually periodic digit stream: prefix, then period repeated forever.
struct DigitStream {
  ClusterPt v;
  std::vector<int> prefix;
  std::vector<int> period;  // empty means all zeros
};

enum class StreamKind { kRejected, kDyadic, kNonDyadic };

struct StreamClass {
  StreamKind kind = StreamKind::kRejected;
  Rational b_limit;  // b_inf
  Rational a_limit;  // a_inf = b_inf - 1
};

inline StreamClass classify_stream(const DigitStream& s) {
  StreamClass c;
  const bool all_ones = !s.period.empty() &&
                        std::all_of(s.period.begin(), s.period.end(), [](int d) { return d == 1; });
  if (all_ones) return c;  // inward-pointing tail
  const bool all_zeros =
      std::all_of(s.period.begin(), s.period.end(), [](int d) { return d == 0; });
  BigInt pre = 0, per = 0;
  for (int d : s.prefix) pre = pre * 2 + d;
  for (int d : s.period) per = per * 2 + d;
  const BigInt scale = BigInt(1) << s.prefix.size();
  Rational value(pre, scale);
  if (!all_zeros) {
    const BigInt cycle = (BigInt(1) << s.period.size()) - 1;
    value += Rational(per, scale * cycle);
  }
  const Point base = s.v.coords();
  c.kind = all_zeros ? StreamKind::kDyadic : StreamKind::kNonDyadic;
  c.b_limit = base.y.to_rational() + theta(s.v).to_rational() * value;
  c.a_limit = c.b_limit - 1;
  return c;
}

enum class CaseTag { kCase1 = 1, kCase2, kCase3, kCase4, kCase5 };

inline std::string case_name(CaseTag t) {
  return "case" + std::to_string(static_cast<int>(t));
}

// Which of the five tail configurations the base vertex v belongs to.
// Second-quadrant vertices give cases 2 and 3, fourth-quadrant vertices the
// mirrored cases 4 and 5.
inline CaseTag case_tag(const ClusterPt& v) {
  if (v.n == 0) return CaseTag::kCase1;
  const Dyadic th = theta(v);
  const Dyadic zero(0), one(1), minus_one(-1);
  for (const Point& r : object(v).base_reps()) {
    for (int k = -2; k <= 2; ++k) {
      const Point q = r.shift(Dyadic(2 * k));
      if (minus_one < q.x && q.x <= zero && zero <= q.y && q.y < one)
        return classify_point({q.x, q.y - th}) ? CaseTag::kCase2 : CaseTag::kCase3;
      if (zero <= q.x && q.x < one && minus_one < q.y && q.y <= zero)
        return classify_point({q.x - th, q.y}) ? CaseTag::kCase4 : CaseTag::kCase5;
    }
  }
  throw Error("Internal", "no quadrant lift for " + v.to_string());
}

}  // namespace moebius
