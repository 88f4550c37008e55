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

// The standard cluster T0. The point (n, m) sits at (m/2^n, 1 + (m-1)/2^n);
// dually it is the chord joining the adjacent dyadics (m-1)/2^n and m/2^n.
// Chords of the dyadic triangulation are grouped into triangles (L, k): the
// arc [k/2^L, (k+1)/2^L] together with its two halves.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moebius/band.hpp"
#include "moebius/dyadic.hpp"
#include "moebius/error.hpp"

namespace moebius {

struct ClusterPt {
  unsigned n = 0;
  std::uint64_t m = 0;

  static ClusterPt make(unsigned n, std::uint64_t m) {
    if (n > 62) throw DepthLimit("depth " + std::to_string(n) + " exceeds 62");
    const std::uint64_t period = std::uint64_t{2} << n;
    m %= period;
    if (n == 0) m = 0;  // (0,1) is the same iso class as (0,0)
    return {n, m};
  }

  friend bool operator==(const ClusterPt&, const ClusterPt&) = default;
  friend auto operator<=>(const ClusterPt&, const ClusterPt&) = default;

  Dyadic h() const { return Dyadic::inv_pow2(n); }
  // Lift (m h, 1 + (m - 1) h).
  Point coords() const {
    const Dyadic step = h();
    const Dyadic mh = Dyadic(BigInt(m), n);
    return {mh, Dyadic(1) + mh - step};
  }

  std::string to_string() const {
    return "T(" + std::to_string(n) + "," + std::to_string(m) + ")";
  }

  // "T(n,m)".
  static ClusterPt parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ' && c != '\t') s.push_back(c);
    const auto comma = s.find(',');
    if (s.size() < 6 || s[0] != 'T' || s[1] != '(' || s.back() != ')' ||
        comma == std::string::npos)
      throw ParseError("expected T(n,m), got '" + std::string(text) + "'");
    auto num = [&](const std::string& part) -> std::uint64_t {
      if (part.empty() || part.size() > 19 ||
          part.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected T(n,m), got '" + std::string(text) + "'");
      return std::stoull(part);
    };
    const std::uint64_t n = num(s.substr(2, comma - 2));
    const std::uint64_t m = num(s.substr(comma + 1, s.size() - comma - 2));
    if (n > 62) throw ParseError("depth too large in '" + std::string(text) + "'");
    if (m >= (std::uint64_t{2} << n) || (n == 0 && m == 1))
      throw ParseError("index out of range in '" + std::string(text) + "'");
    return {static_cast<unsigned>(n), m};
  }
};

inline unsigned depth(const ClusterPt& v) { return v.n; }

inline Obj object(const ClusterPt& v) { return Obj::normal_form(v.coords()); }

// Chord endpoints as circle points {(m-1)/2^n, m/2^n}.
inline std::pair<CircleAngle, CircleAngle> chord(const ClusterPt& v) {
  if (v.n == 0) return {CircleAngle(Dyadic(0)), CircleAngle(Dyadic(1))};
  const Dyadic mh = Dyadic(BigInt(v.m), v.n);
  CircleAngle a(mh - v.h());
  CircleAngle b(mh);
  if (b < a) std::swap(a, b);
  return {a, b};
}

inline std::string chord_string(const ClusterPt& v) {
  const auto [a, b] = chord(v);
  return "{" + a.to_string() + ", " + b.to_string() + "}";
}

// The cluster point whose lift is exactly p, if any.
inline std::optional<ClusterPt> classify_point(const Point& p) {
  const Dyadic d = p.y - p.x;
  const bool upper = d.sign() >= 0;
  const Dyadic h = upper ? Dyadic(1) - d : Dyadic(1) + d;
  if (h.sign() <= 0 || h.num() != 1) return std::nullopt;
  const unsigned n = h.exp();
  if (!p.x.is_multiple_of_inv_pow2(n)) return std::nullopt;
  const BigInt j = p.x.times_pow2(static_cast<int>(n)).floor();
  const BigInt period = BigInt(2) << n;
  BigInt m = (upper ? j : j + 1) % period;
  if (m < 0) m += period;
  if (n > 62) throw DepthLimit("cluster point of depth " + std::to_string(n));
  return ClusterPt::make(n, static_cast<std::uint64_t>(m));
}

inline std::optional<ClusterPt> member(const Obj& X) {
  return classify_point(X.canonical());
}

// ---------------------------------------------------------------------------
// Triangles of the dyadic triangulation.

struct TriangleId {
  unsigned level = 0;
  std::uint64_t k = 0;
  friend bool operator==(const TriangleId&, const TriangleId&) = default;
  friend auto operator<=>(const TriangleId&, const TriangleId&) = default;
};

// Point of the arc [j/2^n, (j+1)/2^n].
inline ClusterPt arc_point(unsigned n, std::uint64_t j) {
  return ClusterPt::make(n, j + 1);
}

// A triangle as the directed cycle of irreducible T-maps
// pts[0] -> pts[1] -> pts[2] -> pts[0].
struct Triangle {
  TriangleId id;
  std::array<ClusterPt, 3> pts;

  bool contains(const ClusterPt& v) const {
    return pts[0] == v || pts[1] == v || pts[2] == v;
  }
  ClusterPt successor(const ClusterPt& v) const {
    for (int i = 0; i < 3; ++i)
      if (pts[i] == v) return pts[(i + 1) % 3];
    throw Error("Internal", v.to_string() + " not in triangle");
  }
  ClusterPt predecessor(const ClusterPt& v) const {
    for (int i = 0; i < 3; ++i)
      if (pts[i] == v) return pts[(i + 2) % 3];
    throw Error("Internal", v.to_string() + " not in triangle");
  }
};

inline Triangle triangle(TriangleId id) {
  if (id.level + 1 > 62) throw DepthLimit("triangle level too deep");
  const ClusterPt parent = arc_point(id.level, id.k);
  const ClusterPt left = arc_point(id.level + 1, 2 * id.k);
  const ClusterPt right = arc_point(id.level + 1, 2 * id.k + 1);
  return {id, {left, parent, right}};
}

// The two triangles containing v: the one below its chord, then the one above.
inline std::array<Triangle, 2> neighbors(const ClusterPt& v) {
  if (v.n == 0) return {triangle({0, 0}), triangle({0, 1})};
  const std::uint64_t period = std::uint64_t{2} << v.n;
  const std::uint64_t j = (v.m + period - 1) % period;
  return {triangle({v.n, j}), triangle({v.n - 1, j >> 1})};
}

inline std::array<ClusterPt, 2> t_out(const ClusterPt& v) {
  const auto tri = neighbors(v);
  return {tri[0].successor(v), tri[1].successor(v)};
}

inline std::array<ClusterPt, 2> t_in(const ClusterPt& v) {
  const auto tri = neighbors(v);
  return {tri[0].predecessor(v), tri[1].predecessor(v)};
}

// The triangle containing both v and w, if they are adjacent.
inline std::optional<Triangle> shared_triangle(const ClusterPt& v, const ClusterPt& w) {
  if (v == w) return std::nullopt;
  for (const Triangle& t : neighbors(v))
    if (t.contains(w)) return t;
  return std::nullopt;
}

// All cluster points of depth <= n, one per iso class.
inline std::vector<ClusterPt> cluster_points(unsigned max_n) {
  std::vector<ClusterPt> out{ClusterPt{0, 0}};
  for (unsigned n = 1; n <= max_n; ++n)
    for (std::uint64_t m = 0; m < (std::uint64_t{2} << n); ++m) out.push_back({n, m});
  return out;
}

// ---------------------------------------------------------------------------
// Rectangle enumeration.

struct ClusterHit {
  ClusterPt pt;
  Point rep;
  friend bool operator==(const ClusterHit&, const ClusterHit&) = default;
  friend auto operator<=>(const ClusterHit& a, const ClusterHit& b) {
    if (auto c = a.pt <=> b.pt; c != 0) return c;
    return a.rep <=> b.rep;
  }
};

namespace detail {

// Throws UnboundedRect when cluster points accumulate inside R at one of the
// boundary lines y = x + 1 or y = x - 1.
inline void check_bounded(const Rect& r) {
  for (int c : {1, -1}) {
    const Dyadic lo = std::max(r.x_lo, r.y_lo - c);
    const Dyadic hi = std::min(r.x_hi, r.y_hi - c);
    if (hi < lo) continue;
    if (lo < hi)
      throw UnboundedRect(r.to_string() + " contains a segment of y = x " +
                          (c > 0 ? "+ 1" : "- 1"));
    // The closure touches the line in the single point (lo, lo + c). Probe
    // the two nearest cluster points at a depth finer than every corner.
    const Dyadic h = Dyadic::inv_pow2(r.exponent() + 3);
    const Point p{lo, lo + c};
    const std::array<Point, 2> probes =
        c > 0 ? std::array<Point, 2>{Point{p.x, p.y - h}, Point{p.x + h, p.y}}
              : std::array<Point, 2>{Point{p.x, p.y + h}, Point{p.x - h, p.y}};
    for (const Point& q : probes)
      if (r.contains(q))
        throw UnboundedRect(r.to_string() + " accumulates cluster points at " +
                            p.to_string());
  }
}

// Visits the lifts of cluster points lying in R; stops early when visit
// returns false.
template <typename Visit>
void scan_rect(const Rect& r, unsigned max_n, Visit&& visit) {
  for (unsigned n = 0; n <= max_n; ++n) {
    const Dyadic h = Dyadic::inv_pow2(n);
    // Upper family y = x + 1 - h, lower family y = x - 1 + h; they agree at n = 0.
    for (int fam = 0; fam < (n == 0 ? 1 : 2); ++fam) {
      const Dyadic off = fam == 0 ? Dyadic(1) - h : h - 1;
      const Dyadic lo = std::max(r.x_lo, r.y_lo - off);
      const Dyadic hi = std::min(r.x_hi, r.y_hi - off);
      if (hi < lo) continue;
      const BigInt j0 = lo.times_pow2(static_cast<int>(n)).ceil();
      const BigInt j1 = hi.times_pow2(static_cast<int>(n)).floor();
      for (BigInt j = j0; j <= j1; ++j) {
        const Dyadic x(j, n);
        const Point p{x, x + off};
        if (!r.contains(p)) continue;
        const BigInt period = BigInt(2) << n;
        BigInt m = (fam == 0 ? j : j + 1) % period;
        if (m < 0) m += period;
        if (!visit(ClusterHit{ClusterPt::make(n, static_cast<std::uint64_t>(m)), p}))
          return;
      }
    }
  }
}

inline unsigned rect_depth(const Rect& r) {
  const unsigned n = r.exponent() + 1;
  if (n > max_depth())
    throw DepthLimit("rectangle needs depth " + std::to_string(n) + " > cap " +
                     std::to_string(max_depth()));
  return n;
}

}  // namespace detail

// Every lift of a cluster point inside R, sorted.
inline std::vector<ClusterHit> enum_in_rect_hits(const Rect& r, unsigned extra_depth = 0) {
  std::vector<ClusterHit> out;
  if (r.empty()) return out;
  detail::check_bounded(r);
  const unsigned n = detail::rect_depth(r) + extra_depth;
  detail::scan_rect(r, n, [&](const ClusterHit& hit) {
    out.push_back(hit);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<ClusterPt> enum_in_rect(const Rect& r, unsigned extra_depth = 0) {
  std::set<ClusterPt> out;
  for (const ClusterHit& h : enum_in_rect_hits(r, extra_depth)) out.insert(h.pt);
  return out;
}

inline bool rect_meets_cluster(const Rect& r) {
  if (r.empty()) return false;
  detail::check_bounded(r);
  bool found = false;
  detail::scan_rect(r, detail::rect_depth(r), [&](const ClusterHit&) {
    found = true;
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Mutated clusters as finite differences from T0, and chord flips.

class ClusterOverlay {
 public:
  const std::set<Obj>& removed() const { return removed_; }
  const std::set<Obj>& added() const { return added_; }

  bool contains(const Obj& X) const {
    if (added_.count(X)) return true;
    return member(X).has_value() && !removed_.count(X);
  }

  friend bool operator==(const ClusterOverlay&, const ClusterOverlay&) = default;

  ClusterOverlay replace(const Obj& X, const Obj& Y) const {
    ClusterOverlay c = *this;
    if (!c.added_.erase(X)) c.removed_.insert(X);
    if (!c.removed_.erase(Y)) c.added_.insert(Y);
    return c;
  }

 private:
  std::set<Obj> removed_;
  std::set<Obj> added_;
};

namespace detail {

// Apex of the triangle of C on the arc strictly between u and u + span.
inline std::optional<Dyadic> find_apex(const ClusterOverlay& c, const Dyadic& u,
                                       const Dyadic& v, const Dyadic& span,
                                       const std::vector<Dyadic>& candidates) {
  std::optional<Dyadic> best;
  for (const Dyadic& cand : candidates) {
    const Dyadic p = lift_into_window(CircleAngle(cand), u);
    if (!(u < p && p < u + span)) continue;
    if (!c.contains(Obj::from_ends(u, p)) || !c.contains(Obj::from_ends(v, p))) continue;
    if (best && *best != p)
      throw Error("Internal", "two apexes on one side of a chord");
    best = p;
  }
  return best;
}

}  // namespace detail

// Flips the chord X of C. Returns the new cluster and the replacement X*.
inline std::pair<ClusterOverlay, Obj> mutate(const ClusterOverlay& c, const Obj& X) {
  if (!c.contains(X)) throw NotInCluster(X.to_string());
  const auto [cu, cv] = ends(X);
  const Dyadic u = cu.value();
  const Dyadic v = cv.value();
  std::vector<Dyadic> candidates;
  unsigned e = X.exponent() + 2;
  for (const Obj& a : c.added()) e = std::max(e, a.exponent() + 2);
  for (const Dyadic& end : {u, v})
    for (unsigned k = 0; k <= e; ++k) {
      candidates.push_back(end + Dyadic::inv_pow2(k));
      candidates.push_back(end - Dyadic::inv_pow2(k));
    }
  for (const Obj& a : c.added()) {
    const auto [p, q] = ends(a);
    candidates.push_back(p.value());
    candidates.push_back(q.value());
  }
  const auto p1 = detail::find_apex(c, u, v, v - u, candidates);
  const auto p2 = detail::find_apex(c, v, u, u + 2 - v, candidates);
  if (!p1 || !p2) throw Error("Internal", "no quadrilateral around " + X.to_string());
  const Obj star = Obj::from_ends(*p1, *p2);
  return {c.replace(X, star), star};
}

inline Obj mutate(const ClusterPt& v) { return mutate(ClusterOverlay{}, object(v)).second; }

}  // namespace moebius
