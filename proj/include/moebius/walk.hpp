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

// Walks, add-T approximations, supports and Hom in the quotient by T0.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "moebius/band.hpp"
#include "moebius/cluster.hpp"
#include "moebius/dyadic.hpp"
#include "moebius/error.hpp"

namespace moebius {

enum class Role { kSink, kSource, kThrough };
enum class Step { kHorizontal, kVertical };

inline const char* role_name(Role r) {
  switch (r) {
    case Role::kSink: return "sink";
    case Role::kSource: return "source";
    case Role::kThrough: return "through";
  }
  return "?";
}

struct WalkVertex {
  ClusterPt pt;
  Point rep;
  Role role = Role::kThrough;
  friend bool operator==(const WalkVertex&, const WalkVertex&) = default;
};

struct Walk {
  std::vector<WalkVertex> vertices;
  std::vector<Step> steps;

  // Direction of the T-map on edge i: true when it points from i to i + 1.
  bool forward(std::size_t i) const { return steps[i] == Step::kVertical; }

  std::vector<ClusterPt> points() const {
    std::vector<ClusterPt> out;
    for (const auto& v : vertices) out.push_back(v.pt);
    return out;
  }
};

struct Approximation {
  std::vector<ClusterPt> sources;  // A
  std::vector<ClusterPt> sinks;    // B
  std::vector<Point> source_reps;
  std::vector<Point> sink_reps;
};

namespace detail {

// Orders window lifts, assigns steps and roles.
inline Walk build_walk(std::vector<ClusterHit> hits) {
  std::sort(hits.begin(), hits.end(), [](const ClusterHit& a, const ClusterHit& b) {
    if (a.rep.x != b.rep.x) return a.rep.x > b.rep.x;
    return a.rep.y < b.rep.y;
  });
  Walk w;
  for (const auto& h : hits) w.vertices.push_back({h.pt, h.rep, Role::kThrough});
  for (std::size_t i = 0; i + 1 < hits.size(); ++i) {
    const Point& a = hits[i].rep;
    const Point& b = hits[i + 1].rep;
    if (a.x == b.x && a.y < b.y) {
      w.steps.push_back(Step::kVertical);
    } else if (a.y == b.y && b.x < a.x) {
      w.steps.push_back(Step::kHorizontal);
    } else {
      throw Error("Internal", "walk lifts " + a.to_string() + " and " + b.to_string() +
                                  " share no coordinate");
    }
  }
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    int in = 0, out = 0;
    if (i > 0) (w.forward(i - 1) ? in : out)++;
    if (i + 1 < w.vertices.size()) (w.forward(i) ? out : in)++;
    w.vertices[i].role = out == 0 ? Role::kSink : (in == 0 ? Role::kSource : Role::kThrough);
  }
  return w;
}

// Largest b < y with (x, b) a lift of a cluster point.
inline std::optional<Dyadic> column_below(const Dyadic& x, const Dyadic& y, unsigned max_n) {
  std::optional<Dyadic> best;
  for (unsigned n = x.exp(); n <= max_n; ++n) {
    const Dyadic h = Dyadic::inv_pow2(n);
    for (const Dyadic& b : {x + 1 - h, x - 1 + h})
      if (b < y && (!best || *best < b)) best = b;
  }
  return best;
}

// Largest a < x with (a, y) a lift of a cluster point.
inline std::optional<Dyadic> row_left(const Dyadic& x, const Dyadic& y, unsigned max_n) {
  std::optional<Dyadic> best;
  for (unsigned n = y.exp(); n <= max_n; ++n) {
    const Dyadic h = Dyadic::inv_pow2(n);
    for (const Dyadic& a : {y - 1 + h, y + 1 - h})
      if (a < x && (!best || *best < a)) best = a;
  }
  return best;
}

}  // namespace detail

// Cluster points in the open rectangle (y - 1, x) x (x - 1, y).
inline std::set<ClusterPt> support(const Obj& X) {
  const Point p = X.canonical();
  return enum_in_rect(Rect::open(p.y - 1, p.x, p.x - 1, p.y));
}

inline Walk compute_walk(const Obj& X) {
  if (member(X)) throw InCluster(X.to_string());
  const Point p = X.canonical();
  const unsigned n = p.exponent() + 1;
  const auto b = detail::column_below(p.x, p.y, n);
  const auto a = detail::row_left(p.x, p.y, n);
  if (!a || !b) throw Error("Internal", "no walk endpoints for " + X.to_string());
  return detail::build_walk(enum_in_rect_hits(Rect::closed(*a, p.x, *b, p.y)));
}

// Memoized; the table is shared between threads.
inline const Walk& walk_of(const Obj& X) {
  static std::mutex mu;
  static std::map<Obj, Walk> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(X); it != memo.end()) return it->second;
  }
  Walk w = compute_walk(X);
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(X, std::move(w)).first->second;
}

inline Walk minimal_walk(const ClusterPt& v, const ClusterPt& w) {
  if (v == w) {
    Walk out;
    out.vertices.push_back({v, object(v).canonical(), Role::kSink});
    return out;
  }
  auto try_orient = [](const ClusterPt& lr, const ClusterPt& ul) -> std::optional<Walk> {
    for (const Point& p : object(lr).base_reps()) {
      for (const Point& r : object(ul).base_reps()) {
        const BigInt k0 = (p.x - r.x).half().floor();
        for (BigInt k = k0 - 1; k <= k0 + 1; ++k) {
          const Point q = r.shift(Dyadic(k * 2, 0));
          if (!(q.x <= p.x && p.y <= q.y)) continue;
          const Dyadic d1 = q.y - p.x;
          const Dyadic d2 = p.y - q.x;
          if (!(Dyadic(-1) < d1 && d1 < Dyadic(1) && Dyadic(-1) < d2 && d2 < Dyadic(1)))
            continue;
          const Rect rect = Rect::closed(q.x, p.x, p.y, q.y);
          try {
            Walk walk = detail::build_walk(enum_in_rect_hits(rect));
            if (walk.vertices.front().pt == lr && walk.vertices.back().pt == ul)
              return walk;
          } catch (const Error&) {
          }
        }
      }
    }
    return std::nullopt;
  };
  if (auto walk = try_orient(v, w)) return *walk;
  if (auto walk = try_orient(w, v)) {
    std::reverse(walk->vertices.begin(), walk->vertices.end());
    std::reverse(walk->steps.begin(), walk->steps.end());
    return *walk;
  }
  throw Unreachable("no minimal walk from " + v.to_string() + " to " + w.to_string());
}

inline Approximation approximation(const Obj& X) {
  const Walk& w = walk_of(X);
  Approximation a;
  for (const auto& v : w.vertices) {
    if (v.role == Role::kSink) {
      a.sinks.push_back(v.pt);
      a.sink_reps.push_back(v.rep);
    } else if (v.role == Role::kSource) {
      a.sources.push_back(v.pt);
      a.source_reps.push_back(v.rep);
    }
  }
  return a;
}

// Closed rectangle between the lifts s <= t is free of cluster points.
inline bool rect_avoids_cluster(const Point& s, const Point& t) {
  return !rect_meets_cluster(Rect::closed(s.x, t.x, s.y, t.y));
}

inline int hom_ct_dim(const Obj& X, const Obj& Y) {
  if (member(X) || member(Y)) return 0;
  const auto reps = hom_reps(X, Y);
  if (!reps) return 0;
  return rect_avoids_cluster(reps->first, reps->second) ? 1 : 0;
}

// Lifts (a, b, c) of A, B, C chained through the basic maps A -> B -> C.
struct Chain {
  Point a, b, c;
};

inline std::optional<Chain> chain_reps(const Obj& A, const Obj& B, const Obj& C) {
  const Point b = B.canonical();
  const auto a = align_source(A, b);
  const auto c = align_target(b, C);
  if (!a || !c) return std::nullopt;
  return Chain{*a, b, *c};
}

// The composite of basics A -> B -> C is nonzero in C_pi.
inline bool composite_nonzero_c(const Obj& A, const Obj& B, const Obj& C) {
  const auto ch = chain_reps(A, B, C);
  return ch && in_hom_window(ch->a, ch->c);
}

// The composite of basics A -> B -> C is nonzero in the quotient by T0.
inline bool composite_survives(const Obj& A, const Obj& B, const Obj& C) {
  if (member(A) || member(B) || member(C)) return false;
  const auto ch = chain_reps(A, B, C);
  return ch && in_hom_window(ch->a, ch->c) && rect_avoids_cluster(ch->a, ch->c);
}

inline Dyadic concrete_epsilon(const std::vector<Obj>& objs) {
  unsigned e = 0;
  for (const Obj& o : objs) e = std::max(e, o.exponent());
  return Dyadic::inv_pow2(e + 2);
}

// S shifted by (d, d) along the diagonal.
inline Obj nudge(const ClusterPt& S, const Dyadic& d) {
  return Obj::normal_form(S.coords().shift(d));
}

struct TauDims {
  int tau_inv = 0;
  int tau = 0;
  int rad = 0;
  int hom0 = 0;
  int hom0_T1 = 0;
  friend bool operator==(const TauDims&, const TauDims&) = default;
};

inline TauDims tau_dims(const ClusterPt& S, const Obj& X) {
  const Obj s = object(S);
  const Dyadic eps = concrete_epsilon({s, X});
  TauDims t;
  t.tau_inv = hom_ct_dim(nudge(S, eps), X);
  t.tau = hom_ct_dim(X, nudge(S, -eps));
  const Point c = s.canonical();
  t.rad = hom_ct_dim(Obj::normal_form(c.x + eps, c.y), X) +
          hom_ct_dim(Obj::normal_form(c.x, c.y + eps), X);
  if (const auto reps = hom_reps(s, X)) {
    const auto hits = enum_in_rect_hits(
        Rect::closed(reps->first.x, reps->second.x, reps->first.y, reps->second.y));
    t.hom0 = std::all_of(hits.begin(), hits.end(),
                         [&](const ClusterHit& h) { return h.pt == S; })
                 ? 1
                 : 0;
  }
  if (!member(X)) {
    for (const auto& v : walk_of(X).vertices)
      if (v.role == Role::kSource && v.pt == S) ++t.hom0_T1;
  }
  return t;
}

// Scalars of Hom(tau^-1 S, f) for the basic f = c * (X -> Y).
inline std::map<ClusterPt, Rational> induced_support_map(const Obj& X, const Obj& Y,
                                                         const Rational& c) {
  if (hom_ct_dim(X, Y) != 1)
    throw NotBasic(X.to_string() + " -> " + Y.to_string() + " is zero in the quotient");
  std::map<ClusterPt, Rational> out;
  const auto sx = support(X);
  const auto sy = support(Y);
  for (const ClusterPt& S : sx) {
    if (!sy.count(S)) continue;
    const Dyadic eps = concrete_epsilon({object(S), X, Y});
    out[S] = composite_survives(nudge(S, eps), X, Y) ? c : Rational(0);
  }
  return out;
}

}  // namespace moebius
