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

// String words, representations and the word/object dictionary.

#include <gtest/gtest.h>

#include <set>

#include "moebius/acceptance.hpp"
#include "moebius/moebius.hpp"

namespace moebius {
namespace {

Dyadic D(const char* s) { return Dyadic::parse(s); }
Obj M(const char* s) { return Obj::parse(s); }
StringWord W(const char* s) { return StringWord::parse(s); }
StringWord V(std::vector<ClusterPt> v) { return StringWord::from_vertices(std::move(v)); }

TEST(Quiver, ArrowsOppositeToTMaps) {
  for (const ClusterPt& v : cluster_points(5)) {
    const ArrowsAt a = arrows_at(v);
    for (const QArrow& q : a.out) {
      EXPECT_EQ(q.from, v);
      EXPECT_EQ(hom_c_dim(object(q.to), object(q.from)), 1);
      EXPECT_EQ(q_arrow(q.from, q.to).has_value(), true);
    }
    for (const QArrow& q : a.in) EXPECT_EQ(q.to, v);
    EXPECT_NE(a.out[0].tri, a.out[1].tri);
  }
}

TEST(Quiver, RelationsVanishInQuotient) {
  // Consecutive arrows in one triangle compose to zero: the T-maps they stand
  // for factor through the third vertex.
  for (const ClusterPt& v : cluster_points(4))
    for (const Triangle& t : neighbors(v)) {
      const ClusterPt a = t.pts[0], b = t.pts[1], c = t.pts[2];
      const ClusterPt cyc[3] = {a, b, c};
      for (int i = 0; i < 3; ++i) {
        const ClusterPt x = cyc[i], y = t.successor(x), z = t.successor(y);
        EXPECT_FALSE(composite_survives(object(x), object(y), object(z)));
      }
    }
}

TEST(Words, Validate) {
  EXPECT_TRUE(validate_word(V({{1, 0}, {0, 0}, {1, 1}})).ok);
  // Both arrows of a path in one triangle break a relation.
  EXPECT_FALSE(validate_word(V({{1, 0}, {0, 0}, {1, 3}})).ok);
  // (1,3) and (0,0) are joined by the arrow (0,0) -> (1,3) only.
  EXPECT_FALSE(q_arrow({1, 3}, {0, 0}).has_value());
  EXPECT_TRUE(q_arrow({0, 0}, {1, 3}).has_value());
  EXPECT_TRUE(validate_word(V({{2, 1}})).ok);
  EXPECT_THROW(V({{0, 0}, {2, 1}}), InvalidWord);
}

TEST(Words, ParsePrint) {
  const StringWord w = W("T(1,0) > T(0,0) > T(1,1)");
  EXPECT_EQ(w.to_string(), "T(1,0) > T(0,0) > T(1,1)");
  EXPECT_EQ(w, V({{1, 0}, {0, 0}, {1, 1}}));
  EXPECT_FALSE(validate_word(W("T(1,0) > T(0,0) < T(1,1)")).ok);
  const StringWord r = W("... T(2,7) < T(1,0) ...");
  EXPECT_TRUE(r.ray_front);
  EXPECT_TRUE(r.ray_back);
  EXPECT_THROW(W("T(1,0) >"), ParseError);
  EXPECT_THROW(W("T(1,0) ? T(0,0)"), ParseError);
}

TEST(Words, HomExample) {
  const StringWord a = obj_to_string(M("M(1/8,1/4)"));
  const StringWord b = obj_to_string(M("M(1/4,3/4)"));
  const auto maps = graph_maps(a, b);
  ASSERT_EQ(maps.size(), 1u);
  EXPECT_EQ(maps[0].w3, (std::set<ClusterPt>{{0, 0}, {1, 1}}));
  EXPECT_EQ(hom_dim_strings(b, a), 0);
}

TEST(Words, KernelCokernel) {
  const StringWord a = V({{2, 1}, {1, 1}, {0, 0}, {1, 3}});
  const StringWord b = V({{1, 0}, {0, 0}, {1, 1}});
  const KerCoker kc = kernel_cokernel_strings(a, b);
  ASSERT_EQ(kc.kernel.size(), 2u);
  EXPECT_EQ(kc.kernel[0], V({{2, 1}}));
  EXPECT_EQ(kc.kernel[1], V({{1, 3}}));
  ASSERT_EQ(kc.cokernel.size(), 1u);
  EXPECT_EQ(kc.cokernel[0], V({{1, 0}}));
  const KerCoker id = kernel_cokernel_strings(b, b);
  EXPECT_TRUE(id.kernel.empty());
  EXPECT_TRUE(id.cokernel.empty());
  // The simple at (0,0) is not a submodule of b: (0,0) -> (1,1) leaves it.
  EXPECT_THROW(kernel_cokernel_strings(V({{0, 0}}), b), NoMorphism);
}

TEST(Reps, ToRepAndDecompose) {
  const StringWord w = V({{2, 1}, {1, 1}, {0, 0}, {1, 3}});
  const RepFin m = to_rep(w);
  EXPECT_EQ(m.total_dim(), 4u);
  EXPECT_NO_THROW(check_relations(m));
  const auto d = decompose_rep(m);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_TRUE(d[0].same_string(w));
  const StringWord s = V({{0, 0}});
  const auto two = decompose_rep(direct_sum(to_rep(s), to_rep(s)));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], s);
  EXPECT_EQ(two[1], s);
}

TEST(Reps, DecomposeSumsOfGridWords) {
  const auto g = grid_off_cluster(2);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); j += 3) {
      const StringWord a = obj_to_string(g[i]), b = obj_to_string(g[j]);
      const auto d = decompose_rep(direct_sum(to_rep(a), to_rep(b)));
      ASSERT_EQ(d.size(), 2u);
      std::multiset<Obj> got{string_to_obj(d[0]), string_to_obj(d[1])};
      EXPECT_EQ(got, (std::multiset<Obj>{g[i], g[j]}));
    }
}

TEST(Equiv, ObjToString) {
  EXPECT_EQ(obj_to_string(M("M(1/2,1/2)")), V({{0, 0}}));
  EXPECT_TRUE(obj_to_string(M("M(1/4,3/4)")).same_string(W("T(1,0) > T(0,0) > T(1,1)")));
  EXPECT_EQ(obj_to_string(M("M(1/8,1/4)")), W("T(2,1) < T(1,1) < T(0,0) > T(1,3)"));
}

TEST(Equiv, StringToObj) {
  EXPECT_EQ(string_to_obj(V({{0, 0}})), M("M(1/2,1/2)"));
  EXPECT_EQ(string_to_obj(V({{1, 0}, {0, 0}, {1, 1}})), M("M(1/4,3/4)"));
  EXPECT_EQ(string_to_obj(V({{1, 0}})), M("M(1,3/4)"));
  EXPECT_THROW(string_to_obj(V({{1, 0}, {0, 0}, {1, 3}})), InvalidWord);
}

TEST(Equiv, SimpleObjects) {
  EXPECT_EQ(simple_object({0, 0}), M("M(1/2,1/2)"));
  EXPECT_EQ(simple_object({1, 0}), M("M(1,3/4)"));
  EXPECT_EQ(simple_object({2, 1}), M("M(1/2,9/8)"));
  for (const ClusterPt& v : cluster_points(4)) {
    EXPECT_EQ(support(simple_object(v)), std::set<ClusterPt>{v});
    EXPECT_EQ(simple_object(v), mutate(v));
  }
}

TEST(Equiv, RoundTripDeeperGrid) {
  for (const Obj& X : grid_off_cluster(4)) {
    const StringWord w = obj_to_string(X);
    EXPECT_TRUE(validate_word(w).ok) << X.to_string();
    EXPECT_EQ(string_to_obj(w), X);
  }
}

TEST(Equiv, Transport) {
  const GraphMap g = transport_to_strings(M("M(1/8,1/4)"), M("M(1/4,3/4)"));
  EXPECT_EQ(g.w3, (std::set<ClusterPt>{{0, 0}, {1, 1}}));
  const auto [x, y] = transport_to_objects(obj_to_string(M("M(1/8,1/4)")),
                                           obj_to_string(M("M(1/4,3/4)")));
  EXPECT_EQ(x, M("M(1/8,1/4)"));
  EXPECT_EQ(y, M("M(1/4,3/4)"));
  EXPECT_THROW(transport_to_strings(M("M(1/4,3/4)"), M("M(1/8,1/4)")), NoMorphism);
}

TEST(Rays, Extend) {
  const StringWord s = V({{0, 0}});
  EXPECT_EQ(g_extend(s, 0).to_string(), "... T(1,0) > T(0,0) < T(1,2) ...");
  EXPECT_EQ(g_extend(s, 1).to_string(),
            "... T(2,7) < T(1,0) > T(0,0) < T(1,2) > T(2,3) ...");
  for (unsigned k = 0; k <= 3; ++k) {
    const StringWord e = g_extend(s, k);
    EXPECT_EQ(e.size(), 3 + 2 * k);
    StringWord plain = e;
    plain.ray_front = plain.ray_back = false;
    EXPECT_TRUE(validate_word(plain).ok);
    EXPECT_EQ(f_strip(e), s);
  }
}

TEST(Rays, StripUnmarkedIsIdentity) {
  const StringWord w = obj_to_string(M("M(1/8,1/4)"));
  EXPECT_EQ(f_strip(w), w);
}

TEST(Digits, Coordinates) {
  EXPECT_EQ(digits_to_coords({{0, 0}, {1}}), (Point{0, D("1/2")}));
  EXPECT_EQ(classify_point(digits_to_coords({{0, 0}, {1}})), (ClusterPt{1, 0}));
  EXPECT_EQ(digits_to_coords({{0, 0}, {0}}), (Point{D("-1/2"), 0}));
  EXPECT_EQ(classify_point(digits_to_coords({{0, 0}, {0}})), (ClusterPt{1, 3}));
  EXPECT_EQ(digits_to_coords({{0, 0}, {1, 0}}), (Point{D("-1/4"), D("1/2")}));
  EXPECT_EQ(classify_point(digits_to_coords({{0, 0}, {1, 0}})), (ClusterPt{2, 7}));
  EXPECT_EQ(theta({2, 1}), D("1/4"));
}

TEST(Digits, Inverse) {
  const DigitPrefix p{{0, 0}, {1, 0, 1, 1}};
  const auto w = classify_point(digits_to_coords(p));
  ASSERT_TRUE(w);
  EXPECT_EQ(coords_to_digits({0, 0}, *w, 10), p);
  EXPECT_THROW(coords_to_digits({0, 0}, *w, 2), Unreachable);
  EXPECT_THROW(coords_to_digits({1, 0}, {1, 2}, 10), Unreachable);
  EXPECT_EQ(p.to_string(), "T(0,0):1011");
}

TEST(Digits, Streams) {
  const StreamClass ones = classify_stream({{0, 0}, {0}, {1}});
  EXPECT_EQ(ones.kind, StreamKind::kRejected);
  const StreamClass z = classify_stream({{0, 0}, {1}, {}});
  EXPECT_EQ(z.kind, StreamKind::kDyadic);
  EXPECT_EQ(z.b_limit, Rational(1, 2));
  EXPECT_EQ(z.a_limit, Rational(-1, 2));
  // 0.010101... = 1/3 of theta = 1 past b = 0.
  const StreamClass third = classify_stream({{0, 0}, {}, {0, 1}});
  EXPECT_EQ(third.kind, StreamKind::kNonDyadic);
  EXPECT_EQ(third.b_limit, Rational(1, 3));
}

TEST(Digits, CaseTags) {
  EXPECT_EQ(case_tag({0, 0}), CaseTag::kCase1);
  std::set<CaseTag> seen;
  for (const ClusterPt& v : cluster_points(3)) seen.insert(case_tag(v));
  EXPECT_EQ(seen.size(), 5u);
  EXPECT_EQ(case_name(CaseTag::kCase4), "case4");
}

}  // namespace
}  // namespace moebius
