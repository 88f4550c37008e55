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

// Angles, band objects and the standard cluster.

#include <gtest/gtest.h>

#include <set>

#include "moebius/acceptance.hpp"
#include "moebius/moebius.hpp"

namespace moebius {
namespace {

Dyadic D(const char* s) { return Dyadic::parse(s); }
Obj M(const char* s) { return Obj::parse(s); }

// Hom oracle: scan every lift of X within a few periods against both base
// lifts of Y.
int hom_c_oracle(const Obj& X, const Obj& Y) {
  for (const Point& s0 : X.base_reps())
    for (int k = -3; k <= 3; ++k) {
      const Point s = s0.shift(Dyadic(2 * k));
      for (const Point& t : Y.base_reps())
        if (t.y - 1 < s.x && s.x <= t.x && t.x - 1 < s.y && s.y <= t.y) return 1;
    }
  return 0;
}

// Enumeration oracle: every (n, m) up to depth n_max, every lift near the
// rectangle.
std::set<ClusterPt> enum_oracle(const Rect& r, unsigned n_max) {
  std::set<ClusterPt> out;
  for (const ClusterPt& v : cluster_points(n_max))
    for (const Point& p0 : object(v).base_reps())
      for (int k = -3; k <= 3; ++k)
        if (r.contains(p0.shift(Dyadic(2 * k)))) out.insert(v);
  return out;
}

TEST(Dyadic, Arithmetic) {
  EXPECT_EQ(D("1/8") + D("1/4"), D("3/8"));
  EXPECT_EQ(Dyadic(1).half(), D("1/2"));
  EXPECT_LT(D("-3/4"), D("-5/8"));
  EXPECT_EQ((D("3/8") - D("3/8")).exp(), 0u);
  EXPECT_EQ(D("6/16").to_string(), "3/8");
  EXPECT_EQ(D("1/2^3"), D("1/8"));
  EXPECT_EQ(D("-7/4").floor(), BigInt(-2));
  EXPECT_EQ(D("-7/4").ceil(), BigInt(-1));
}

TEST(Dyadic, ParseRejectsNonDyadic) {
  EXPECT_THROW(D("1/3"), ParseError);
  EXPECT_THROW(D("x"), ParseError);
  EXPECT_THROW(D("1/0"), ParseError);
}

TEST(Dyadic, LiftIntoWindow) {
  EXPECT_EQ(lift_into_window(CircleAngle(D("3/2")), Dyadic(-1)), D("-1/2"));
  EXPECT_EQ(lift_into_window(CircleAngle(Dyadic(0)), Dyadic(0)), Dyadic(0));
  EXPECT_EQ(lift_into_window(CircleAngle(D("1/8")), Dyadic(2)), D("17/8"));
  for (int i = -20; i <= 20; ++i) {
    const Dyadic lo(BigInt(i), 2);
    const Dyadic l = lift_into_window(CircleAngle(D("5/8")), lo);
    EXPECT_LE(lo, l);
    EXPECT_LT(l, lo + 2);
    EXPECT_EQ(mod2(l), D("5/8"));
  }
}

TEST(Band, NormalForm) {
  const Obj a = normal_form(D("1/4"), D("-1/2"));
  EXPECT_EQ(a.x(), D("1/2"));
  EXPECT_EQ(a.delta(), D("3/4"));
  const Obj b = normal_form(0, 0);
  EXPECT_EQ(b.x(), Dyadic(0));
  EXPECT_EQ(b.delta(), Dyadic(0));
  const Obj c = normal_form(D("7/4"), D("5/2"));
  EXPECT_EQ(c.x(), D("7/4"));
  EXPECT_EQ(c.delta(), D("3/4"));
  EXPECT_THROW(normal_form(0, 1), BandBoundary);
  EXPECT_THROW(normal_form(0, -1), BandBoundary);
}

TEST(Band, NormalFormIsInvariantUnderIdentifications) {
  for (const Obj& X : grid_objects(3)) {
    const Point p = X.canonical();
    EXPECT_EQ(Obj::normal_form(p.flip()), X);
    EXPECT_EQ(Obj::normal_form(p.shift(Dyadic(2))), X);
    EXPECT_EQ(Obj::normal_form(p.shift(Dyadic(-4))), X);
    EXPECT_EQ(Obj::parse(X.to_string()), X);
  }
}

TEST(Band, GridSize) {
  EXPECT_EQ(grid_objects(3).size(), 120u);
  EXPECT_EQ(grid_off_cluster(3).size(), 91u);
}

TEST(Band, Parse) {
  EXPECT_EQ(M("M(1/4,-1/2)"), M("M(1/2,5/4)"));
  EXPECT_THROW(M("M(1/3,1)"), ParseError);
  EXPECT_THROW(M("N(0,0)"), ParseError);
  EXPECT_THROW(M("M(0,1)"), BandBoundary);
}

TEST(Band, Ends) {
  auto as_set = [](const Obj& X) {
    const auto [a, b] = ends(X);
    return std::set<Dyadic>{a.value(), b.value()};
  };
  EXPECT_EQ(as_set(M("M(0,0)")), (std::set<Dyadic>{0, 1}));
  EXPECT_EQ(as_set(M("M(1/4,1)")), (std::set<Dyadic>{D("1/4"), 0}));
  EXPECT_EQ(as_set(M("M(1/2,5/4)")), (std::set<Dyadic>{D("1/2"), D("1/4")}));
}

TEST(Band, Mesh) {
  EXPECT_EQ(mesh({}), Dyadic(1));
  EXPECT_EQ(mesh({M("M(0,0)")}), Dyadic(1));
  EXPECT_EQ(mesh({M("M(0,0)"), M("M(0,1/2)")}), D("1/2"));
}

TEST(Band, HomExamples) {
  EXPECT_EQ(hom_c_dim(M("M(0,0)"), M("M(1/4,1/2)")), 1);
  EXPECT_EQ(hom_c_dim(M("M(1/4,1/2)"), M("M(0,0)")), 1);
  // The lift (1/4,1) of the source fails the strict bound against (1/2,5/4);
  // the other direction holds.
  EXPECT_EQ(hom_c_dim(M("M(1/4,1)"), M("M(1/2,5/4)")), 0);
  EXPECT_EQ(hom_c_dim(M("M(1/2,5/4)"), M("M(1/4,1)")), 1);
}

TEST(Band, HomMatchesOracleOnGrid) {
  const auto g = grid_objects(3);
  for (const Obj& X : g)
    for (const Obj& Y : g) ASSERT_EQ(hom_c_dim(X, Y), hom_c_oracle(X, Y)) << X.to_string() << " " << Y.to_string();
}

TEST(Band, Compatible) {
  EXPECT_TRUE(compatible(M("M(0,0)"), M("M(1/4,1)")));
  EXPECT_EQ(hom_c_dim(M("M(1/4,1)"), M("M(0,0)")), 1);
  EXPECT_EQ(hom_c_dim(M("M(0,0)"), M("M(1/4,1)")), 0);
  EXPECT_FALSE(compatible(M("M(0,0)"), M("M(1/4,1/2)")));
  EXPECT_TRUE(compatible(M("M(1/4,1/2)"), M("M(1/4,1/2)")));
}

TEST(Band, CompatibleIsNonCrossingOnGrid) {
  const auto g = grid_objects(3);
  for (const Obj& X : g)
    for (const Obj& Y : g)
      if (X != Y) ASSERT_EQ(compatible(X, Y), !ends_cross(X, Y)) << X.to_string() << " " << Y.to_string();
}

TEST(Band, TriangleComplete) {
  const auto [z, w] = triangle_complete(M("M(0,0)"), M("M(0,1/2)"), TriangleKind::kPositive);
  EXPECT_EQ(z, M("M(1,1/2)"));
  EXPECT_EQ(z.x(), D("3/2"));
  EXPECT_EQ(z.delta(), D("1/2"));
  EXPECT_EQ(w, M("M(0,0)"));
  const auto [z2, w2] = triangle_complete(M("M(0,0)"), M("M(1/2,0)"), TriangleKind::kNegative);
  EXPECT_EQ(z2, M("M(1/2,1)"));
  EXPECT_EQ(w2, M("M(0,0)"));
  EXPECT_THROW(triangle_complete(M("M(0,0)"), M("M(1/2,1/2)"), TriangleKind::kPositive),
               NotBasicAligned);
}

TEST(Cluster, Membership) {
  EXPECT_EQ(member(M("M(0,0)")), (ClusterPt{0, 0}));
  EXPECT_EQ(member(M("M(1/4,9/8)")), (ClusterPt{3, 2}));
  EXPECT_EQ(depth(*member(M("M(1/4,9/8)"))), 3u);
  EXPECT_FALSE(member(M("M(1/4,1/2)")));
  EXPECT_EQ(depth(ClusterPt{2, 1}), 2u);
  EXPECT_EQ(ClusterPt::make(0, 1), (ClusterPt{0, 0}));
}

TEST(Cluster, PointsAreDistinctObjects) {
  std::set<Obj> seen;
  for (const ClusterPt& v : cluster_points(6)) {
    EXPECT_TRUE(seen.insert(object(v)).second) << v.to_string();
    EXPECT_EQ(member(object(v)), v);
    EXPECT_EQ(ClusterPt::parse(v.to_string()), v);
  }
  std::set<Obj> depth4;
  for (const ClusterPt& v : cluster_points(4)) depth4.insert(object(v));
  EXPECT_EQ(depth4.size(), 61u);
}

TEST(Cluster, PairwiseCompatible) {
  const auto cps = cluster_points(4);
  for (const auto& a : cps)
    for (const auto& b : cps) ASSERT_TRUE(compatible(object(a), object(b)));
}

TEST(Cluster, Neighbors) {
  const auto out = t_out(ClusterPt{0, 0});
  const auto in = t_in(ClusterPt{0, 0});
  EXPECT_EQ((std::set<ClusterPt>{out[0], out[1]}), (std::set<ClusterPt>{{1, 0}, {1, 2}}));
  EXPECT_EQ((std::set<ClusterPt>{in[0], in[1]}), (std::set<ClusterPt>{{1, 1}, {1, 3}}));
  EXPECT_EQ(object({1, 1}), M("M(1/2,1)"));
  EXPECT_EQ(object({1, 3}), M("M(3/2,2)"));
  EXPECT_EQ(object({1, 0}), M("M(0,1/2)"));
  EXPECT_EQ(object({1, 2}), M("M(1,3/2)"));
}

TEST(Cluster, TriangleMapsAreBasic) {
  // Each T-map v -> successor is a nonzero basic map in C.
  for (const ClusterPt& v : cluster_points(5))
    for (const Triangle& t : neighbors(v)) {
      ASSERT_TRUE(t.contains(v));
      EXPECT_EQ(hom_c_dim(object(v), object(t.successor(v))), 1) << v.to_string();
      EXPECT_EQ(t.predecessor(t.successor(v)), v);
    }
}

TEST(Cluster, EnumExamples) {
  EXPECT_EQ(enum_in_rect(Rect::open(D("-1/4"), D("1/4"), D("-3/4"), D("3/4"))),
            (std::set<ClusterPt>{{0, 0}, {1, 0}, {1, 1}}));
  EXPECT_EQ(enum_in_rect(Rect::closed(D("-1/2"), D("1/8"), D("-3/4"), D("1/4"))),
            (std::set<ClusterPt>{{3, 2}, {2, 1}, {1, 1}, {0, 0}, {1, 3}, {2, 6}}));
  EXPECT_TRUE(enum_in_rect(Rect::closed(1, 0, 0, 1)).empty());
}

TEST(Cluster, EnumMatchesOracle) {
  int checked = 0;
  for (int a = -4; a <= 4; ++a)
    for (int b = a; b <= a + 4; ++b)
      for (int c = -4; c <= 4; ++c)
        for (int d = c; d <= c + 4; ++d)
          for (bool open : {false, true}) {
            const Dyadic xl(BigInt(a), 2), xh(BigInt(b), 2), yl(BigInt(c), 2), yh(BigInt(d), 2);
            const Rect r = open ? Rect::open(xl, xh, yl, yh) : Rect::closed(xl, xh, yl, yh);
            std::set<ClusterPt> got;
            try {
              got = enum_in_rect(r);
            } catch (const UnboundedRect&) {
              continue;
            }
            ++checked;
            ASSERT_EQ(got, enum_oracle(r, 7)) << r.to_string();
            ASSERT_EQ(got, enum_in_rect(r, 5)) << r.to_string();
          }
  EXPECT_GT(checked, 1000);
}

TEST(Cluster, EnumErrors) {
  EXPECT_THROW(enum_in_rect(Rect::closed(0, D("1/2"), 1, D("3/2"))), UnboundedRect);
  const Dyadic tiny = Dyadic::inv_pow2(20);
  EXPECT_THROW(enum_in_rect(Rect::closed(tiny, tiny * 2, tiny, tiny * 2)), DepthLimit);
}

TEST(Cluster, Mutation) {
  EXPECT_EQ(mutate(ClusterPt{0, 0}), M("M(1/2,1/2)"));
  EXPECT_EQ(mutate(ClusterPt{1, 0}), M("M(1,3/4)"));
  const auto [c1, s] = mutate(ClusterOverlay{}, M("M(0,0)"));
  EXPECT_TRUE(c1.contains(s));
  EXPECT_FALSE(c1.contains(M("M(0,0)")));
  const auto [c2, back] = mutate(c1, s);
  EXPECT_EQ(back, M("M(0,0)"));
  EXPECT_TRUE(c2.removed().empty());
  EXPECT_TRUE(c2.added().empty());
  EXPECT_THROW(mutate(ClusterOverlay{}, M("M(1/4,1/2)")), NotInCluster);
}

TEST(Cluster, MutationIsUniqueOnQuarterGrid) {
  // M(1/2,1/2) is the only object off T0 on the 1/4 grid compatible with
  // every other cluster object of depth <= 5.
  const auto cps = cluster_points(5);
  std::vector<Obj> found;
  for (const Obj& X : grid_objects(2)) {
    if (member(X)) continue;
    bool ok = true;
    for (const ClusterPt& w : cps)
      if (!(w == ClusterPt{0, 0}) && !compatible(X, object(w))) ok = false;
    if (ok) found.push_back(X);
  }
  EXPECT_EQ(found, std::vector<Obj>{M("M(1/2,1/2)")});
}

}  // namespace
}  // namespace moebius
