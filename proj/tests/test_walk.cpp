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

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "moebius/acceptance.hpp"
#include "moebius/moebius.hpp"

namespace moebius {
namespace {

Dyadic D(const char* s) { return Dyadic::parse(s); }
Obj M(const char* s) { return Obj::parse(s); }

std::vector<Point> reps(const Walk& w) {
  std::vector<Point> r;
  for (const auto& v : w.vertices) r.push_back(v.rep);
  return r;
}

std::vector<Role> roles(const Walk& w) {
  std::vector<Role> r;
  for (const auto& v : w.vertices) r.push_back(v.role);
  return r;
}

constexpr Role kB = Role::kSink, kA = Role::kSource, kT = Role::kThrough;

TEST(Walk, Support) {
  EXPECT_EQ(support(M("M(1/4,3/4)")), (std::set<ClusterPt>{{0, 0}, {1, 0}, {1, 1}}));
  EXPECT_EQ(support(M("M(1/2,1/2)")), (std::set<ClusterPt>{{0, 0}}));
  EXPECT_TRUE(support(M("M(0,1/2)")).empty());
  // Oracle: the open support rectangle of the canonical lift.
  for (const Obj& X : grid_off_cluster(3)) {
    const Point p = X.canonical();
    EXPECT_EQ(support(X), enum_in_rect(Rect::open(p.y - 1, p.x, p.x - 1, p.y)));
  }
}

TEST(Walk, QuarterWalk) {
  const Walk& w = walk_of(M("M(1/4,3/4)"));
  EXPECT_EQ(reps(w), (std::vector<Point>{{D("1/4"), D("-1/2")},
                                         {0, D("-1/2")},
                                         {0, 0},
                                         {0, D("1/2")},
                                         {0, D("3/4")}}));
  EXPECT_EQ(w.points(), (std::vector<ClusterPt>{{2, 2}, {1, 1}, {0, 0}, {1, 0}, {2, 0}}));
  EXPECT_EQ(roles(w), (std::vector<Role>{kB, kA, kT, kT, kB}));
}

TEST(Walk, EighthWalk) {
  const Walk& w = walk_of(M("M(1/8,1/4)"));
  EXPECT_EQ(reps(w), (std::vector<Point>{{D("1/8"), D("-3/4")},
                                         {0, D("-3/4")},
                                         {0, D("-1/2")},
                                         {0, 0},
                                         {D("-1/2"), 0},
                                         {D("-1/2"), D("1/4")}}));
  EXPECT_EQ(w.points(),
            (std::vector<ClusterPt>{{3, 2}, {2, 1}, {1, 1}, {0, 0}, {1, 3}, {2, 6}}));
  EXPECT_EQ(roles(w), (std::vector<Role>{kB, kA, kT, kB, kA, kB}));
}

TEST(Walk, HalfWalk) {
  const Walk& w = walk_of(M("M(1/2,1/2)"));
  EXPECT_EQ(reps(w), (std::vector<Point>{{D("1/2"), 0}, {0, 0}, {0, D("1/2")}}));
  EXPECT_EQ(w.points(), (std::vector<ClusterPt>{{1, 2}, {0, 0}, {1, 0}}));
  EXPECT_EQ(roles(w), (std::vector<Role>{kB, kA, kB}));
}

TEST(Walk, ShapeOnGrid) {
  for (const Obj& X : grid_off_cluster(3)) {
    const Walk& w = walk_of(X);
    ASSERT_GE(w.vertices.size(), 3u) << X.to_string();
    EXPECT_EQ(w.vertices.front().role, kB);
    EXPECT_EQ(w.vertices.back().role, kB);
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
      const Point& a = w.vertices[i].rep;
      const Point& b = w.vertices[i + 1].rep;
      // Each step is a basic map between neighbouring cluster points.
      EXPECT_TRUE(a.x == b.x || a.y == b.y);
      const auto t = shared_triangle(w.vertices[i].pt, w.vertices[i + 1].pt);
      EXPECT_TRUE(t.has_value()) << X.to_string();
      const Obj src = object(w.forward(i) ? w.vertices[i].pt : w.vertices[i + 1].pt);
      const Obj dst = object(w.forward(i) ? w.vertices[i + 1].pt : w.vertices[i].pt);
      EXPECT_EQ(hom_c_dim(src, dst), 1);
    }
    for (const auto& v : w.vertices) EXPECT_EQ(member(Obj::normal_form(v.rep)), v.pt);
  }
}

TEST(Walk, MinimalWalk) {
  const Walk a = minimal_walk({0, 0}, {0, 0});
  EXPECT_EQ(a.points(), (std::vector<ClusterPt>{ClusterPt{0, 0}}));
  const Walk b = minimal_walk({0, 0}, {1, 0});
  EXPECT_EQ(b.points(), (std::vector<ClusterPt>{{0, 0}, {1, 0}}));
  const Walk c = minimal_walk({2, 2}, {2, 0});
  EXPECT_EQ(c.points(), walk_of(M("M(1/4,3/4)")).points());
}

TEST(Walk, Approximation) {
  const auto a = approximation(M("M(1/4,3/4)"));
  EXPECT_EQ(a.sources, (std::vector<ClusterPt>{ClusterPt{1, 1}}));
  EXPECT_EQ(a.sinks, (std::vector<ClusterPt>{{2, 2}, {2, 0}}));
  const auto b = approximation(M("M(1/8,1/4)"));
  EXPECT_EQ(b.sources, (std::vector<ClusterPt>{{2, 1}, {1, 3}}));
  EXPECT_EQ(b.sinks, (std::vector<ClusterPt>{{3, 2}, {0, 0}, {2, 6}}));
  const auto c = approximation(M("M(1/2,1/2)"));
  EXPECT_EQ(c.sources, (std::vector<ClusterPt>{ClusterPt{0, 0}}));
  EXPECT_EQ(c.sinks, (std::vector<ClusterPt>{{1, 2}, {1, 0}}));
}

TEST(Walk, HomCt) {
  EXPECT_EQ(hom_ct_dim(M("M(1/8,1/4)"), M("M(1/4,3/4)")), 1);
  EXPECT_EQ(hom_ct_dim(M("M(-1/8,1/4)"), M("M(1/4,3/4)")), 0);
  for (const Obj& Y : grid_objects(2)) EXPECT_EQ(hom_ct_dim(M("M(0,1/2)"), Y), 0);
}

TEST(Walk, HomCtOracle) {
  // Nonzero in the quotient iff nonzero in C and the closed rectangle between
  // aligned lifts holds no point of an independent naive scan.
  const auto g = grid_off_cluster(3);
  const auto cps = cluster_points(6);
  for (const Obj& X : g)
    for (const Obj& Y : g) {
      int expect = 0;
      if (const auto r = hom_reps(X, Y)) {
        const Rect rect = Rect::closed(r->first.x, r->second.x, r->first.y, r->second.y);
        bool hit = false;
        for (const ClusterPt& v : cps)
          for (const Point& p : object(v).base_reps())
            for (int k = -2; k <= 2; ++k) hit = hit || rect.contains(p.shift(Dyadic(2 * k)));
        expect = hit ? 0 : 1;
      }
      ASSERT_EQ(hom_ct_dim(X, Y), expect) << X.to_string() << " " << Y.to_string();
    }
}

TEST(Walk, TauDims) {
  const Obj X = M("M(1/4,3/4)");
  {
    const TauDims want{1, 1, 0, 0, 1};
    EXPECT_EQ(tau_dims({1, 1}, X), want);
  }
  {
    const TauDims want{1, 1, 1, 0, 0};
    EXPECT_EQ(tau_dims({0, 0}, X), want);
  }
  {
    const TauDims want{0, 0, 1, 1, 0};
    EXPECT_EQ(tau_dims({2, 0}, X), want);
  }
}

TEST(Walk, TauDimsAgreeWithRoles) {
  for (const Obj& X : grid_off_cluster(3)) {
    const Walk& w = walk_of(X);
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
      const auto& v = w.vertices[i];
      const TauDims t = tau_dims(v.pt, X);
      const bool end = i == 0 || i + 1 == w.vertices.size();
      EXPECT_EQ(t.tau_inv, end ? 0 : 1);
      const int rad = v.role == kA ? 0 : (v.role == kB && !end ? 2 : 1);
      EXPECT_EQ(t.rad, rad) << X.to_string() << " " << v.pt.to_string();
    }
  }
}

TEST(Walk, EpsilonStable) {
  EXPECT_EQ(concrete_epsilon({M("M(1/8,1/4)")}), D("1/32"));
  EXPECT_EQ(concrete_epsilon({}), D("1/4"));
  // Halving epsilon again never changes the tau^-1 answer.
  for (const Obj& X : grid_off_cluster(3))
    for (const ClusterPt& S : cluster_points(3)) {
      const Dyadic e = concrete_epsilon({object(S), X});
      EXPECT_EQ(hom_ct_dim(nudge(S, e), X), hom_ct_dim(nudge(S, e.half()), X));
      EXPECT_EQ(hom_ct_dim(X, nudge(S, -e)), hom_ct_dim(X, nudge(S, -e.half())));
    }
}

TEST(Walk, InducedSupportMap) {
  const auto m = induced_support_map(M("M(1/8,1/4)"), M("M(1/4,3/4)"), Rational(3));
  const std::map<ClusterPt, Rational> want{{{0, 0}, 3}, {{1, 1}, 3}};
  EXPECT_EQ(m, want);
  const Obj X = M("M(1/4,3/4)");
  const auto id = induced_support_map(X, X, Rational(1));
  EXPECT_EQ(id.size(), support(X).size());
  for (const auto& [v, c] : id) EXPECT_EQ(c, 1);
  EXPECT_THROW(induced_support_map(M("M(-1/8,1/4)"), X, Rational(1)), NotBasic);
}

TEST(Walk, CompositeVanishes) {
  EXPECT_FALSE(composite_survives(M("M(1/8,1/4)"), M("M(1/4,3/4)"), M("M(1/2,9/8)")));
  EXPECT_EQ(hom_ct_dim(M("M(1/8,1/4)"), M("M(1/2,9/8)")), 0);
}

}  // namespace
}  // namespace moebius
