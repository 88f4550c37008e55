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

// Property suites over the dyadic grid. Each suite returns pass/fail with a
// one-line detail naming the first counterexample.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "moebius/moebius.hpp"

namespace moebius {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// All iso classes whose canonical coordinates have exponent <= k.
inline std::vector<Obj> grid_objects(unsigned k) {
  std::vector<Obj> g;
  const long long d = 1LL << k;
  for (long long i = 0; i < 2 * d; ++i)
    for (long long j = 0; j < d; ++j) {
      if (j == 0 && i >= d) continue;
      g.push_back(Obj::normal_form(Dyadic(BigInt(i), k), Dyadic(BigInt(i + j), k)));
    }
  return g;
}

inline std::vector<Obj> grid_off_cluster(unsigned k) {
  std::vector<Obj> g;
  for (const Obj& X : grid_objects(k))
    if (!member(X)) g.push_back(X);
  return g;
}

namespace detail {

struct Failure {
  std::string what;
};

inline void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

inline CriterionResult run_criterion(int id, std::string name,
                                     const std::function<std::string()>& body) {
  CriterionResult r{id, std::move(name), false, "", 0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = body();
    r.pass = true;
  } catch (const Failure& f) {
    r.detail = f.what;
  } catch (const Error& e) {
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::multiset<Obj> as_multiset(const SumObj& s) { return {s.begin(), s.end()}; }

inline std::map<ClusterPt, int> support_count(const SumObj& s) {
  std::map<ClusterPt, int> c;
  for (const Obj& X : s)
    for (const auto& v : support(X)) ++c[v];
  return c;
}

}  // namespace detail

inline CriterionResult criterion_hom_agreement(unsigned k) {
  return detail::run_criterion(1, "hom agreement", [k] {
    const auto g = grid_off_cluster(k);
    std::vector<StringWord> words;
    for (const Obj& X : g) words.push_back(obj_to_string(X));
    std::size_t n = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j, ++n)
        detail::expect(hom_ct_dim(g[i], g[j]) == hom_dim_strings(words[i], words[j]),
                       "hom differs for " + g[i].to_string() + " -> " + g[j].to_string());
    return std::to_string(n) + " ordered pairs";
  });
}

inline CriterionResult criterion_round_trip(unsigned k) {
  return detail::run_criterion(2, "bijection round trips", [k] {
    const auto g = grid_off_cluster(k);
    for (const Obj& X : g) {
      const StringWord w = obj_to_string(X);
      detail::expect(string_to_obj(w) == X, "object round trip fails at " + X.to_string());
      detail::expect(obj_to_string(string_to_obj(w)).same_string(w),
                     "word round trip fails at " + w.to_string());
    }
    return std::to_string(g.size()) + " objects";
  });
}

inline CriterionResult criterion_support(unsigned k) {
  return detail::run_criterion(3, "support equals walk interior", [k] {
    const auto g = grid_off_cluster(k);
    for (const Obj& X : g) {
      const auto pts = walk_of(X).points();
      detail::expect(pts.size() >= 2, "walk too short for " + X.to_string());
      const std::set<ClusterPt> interior(pts.begin() + 1, pts.end() - 1);
      detail::expect(support(X) == interior, "support mismatch at " + X.to_string());
    }
    const std::set<ClusterPt> a{{0, 0}, {1, 0}, {1, 1}};
    const std::set<ClusterPt> b{{0, 0}, {1, 1}, {1, 3}, {2, 1}};
    detail::expect(support(Obj::parse("M(1/4,3/4)")) == a, "support(M(1/4,3/4))");
    detail::expect(support(Obj::parse("M(1/8,1/4)")) == b, "support(M(1/8,1/4))");
    return std::to_string(g.size()) + " objects";
  });
}

inline CriterionResult criterion_approximation(unsigned k) {
  return detail::run_criterion(4, "approximation exactness", [k] {
    const auto g = grid_off_cluster(k);
    const auto cps = cluster_points(k + 1);
    std::size_t maps = 0;
    for (const Obj& X : g) {
      const Approximation ap = approximation(X);
      std::multiset<Dyadic> lx{X.canonical().x}, ly{X.canonical().y}, rx, ry;
      for (const Point& p : ap.source_reps) lx.insert(p.x), ly.insert(p.y);
      for (const Point& p : ap.sink_reps) rx.insert(p.x), ry.insert(p.y);
      detail::expect(lx == rx && ly == ry, "coordinate balance fails at " + X.to_string());
      std::vector<Obj> sinks;
      for (const auto& b : ap.sinks) sinks.push_back(object(b));
      for (const ClusterPt& v : cps) {
        const Obj S = object(v);
        if (hom_c_dim(S, X) != 1) continue;
        ++maps;
        const bool factors = std::any_of(sinks.begin(), sinks.end(), [&](const Obj& B) {
          return composite_nonzero_c(S, B, X);
        });
        detail::expect(factors, S.to_string() + " -> " + X.to_string() +
                                    " does not factor through a sink");
      }
    }
    return std::to_string(g.size()) + " objects, " + std::to_string(maps) + " maps from T0";
  });
}

inline CriterionResult criterion_tau(unsigned k) {
  return detail::run_criterion(5, "AR duality and four-term sum", [k] {
    const auto g = grid_off_cluster(k);
    const auto cps = cluster_points(k + 1);
    for (const Obj& X : g)
      for (const ClusterPt& S : cps) {
        const TauDims t = tau_dims(S, X);
        const std::string at = S.to_string() + ", " + X.to_string();
        detail::expect(t.tau == t.tau_inv, "tau differs from tau^-1 at " + at);
        detail::expect(t.hom0_T1 - t.tau_inv + t.rad - t.hom0 == 0,
                       "alternating sum nonzero at " + at);
      }
    return std::to_string(g.size() * cps.size()) + " pairs";
  });
}

inline CriterionResult criterion_abelian(unsigned k) {
  return detail::run_criterion(6, "kernels and cokernels", [k] {
    const auto g = grid_off_cluster(k);
    std::vector<std::pair<Obj, Obj>> basics;
    for (const Obj& X : g)
      for (const Obj& Y : g)
        if (hom_ct_dim(X, Y) == 1) basics.emplace_back(X, Y);
    const std::size_t stride = std::max<std::size_t>(1, basics.size() / 100);
    std::size_t sampled = 0, factored = 0;
    for (std::size_t n = 0; n < basics.size(); ++n) {
      const auto& [X, Y] = basics[n];
      const std::string at = X.to_string() + " -> " + Y.to_string();
      const MorQ f = basic_mor(X, Y);
      const KernelResult K = kernel(f);
      const KernelResult C = cokernel(f);
      detail::expect(classify(K.map).is_mono, "inclusion not mono for " + at);
      detail::expect(classify(C.map).is_epi, "projection not epi for " + at);
      detail::expect(compose(f, K.map).entries.is_zero(), "f . incl != 0 for " + at);
      detail::expect(compose(C.map, f).entries.is_zero(), "proj . f != 0 for " + at);
      auto kc = detail::support_count(K.object);
      auto cc = detail::support_count(C.object);
      std::set<ClusterPt> verts;
      for (const auto& v : support(X)) verts.insert(v);
      for (const auto& v : support(Y)) verts.insert(v);
      for (const auto& [v, c] : kc) verts.insert(v);
      for (const auto& [v, c] : cc) verts.insert(v);
      for (const auto& v : verts)
        detail::expect(kc[v] - static_cast<int>(support(X).count(v)) +
                               static_cast<int>(support(Y).count(v)) - cc[v] ==
                           0,
                       "dimension count fails at " + v.to_string() + " for " + at);
      if (n % stride != 0 || sampled >= 100) continue;
      ++sampled;
      // Every test map killed by f factors through the kernel, and dually.
      for (const Obj& Z : g) {
        if (hom_ct_dim(Z, X) == 1 && compose(f, basic_mor(Z, X)).entries.is_zero()) {
          Matrix a(1, K.object.size());
          for (std::size_t i = 0; i < K.object.size(); ++i)
            if (hom_ct_dim(Z, K.object[i]) == 1)
            {
              Matrix u(K.object.size(), 1);
              u(i, 0) = 1;
              a(0, i) = compose(K.map, make_mor({Z}, K.object, u)).entries(0, 0);
            }
          Matrix one(1, 1);
          one(0, 0) = 1;
          ++factored;
          detail::expect(a.solve(one).has_value(),
                         Z.to_string() + " -> " + X.to_string() + " misses the kernel of " + at);
        }
        if (hom_ct_dim(Y, Z) == 1 && compose(basic_mor(Y, Z), f).entries.is_zero()) {
          Matrix a(1, C.object.size());
          for (std::size_t i = 0; i < C.object.size(); ++i)
            if (hom_ct_dim(C.object[i], Z) == 1)
            {
              Matrix u(1, C.object.size());
              u(0, i) = 1;
              a(0, i) = compose(make_mor(C.object, {Z}, u), C.map).entries(0, 0);
            }
          Matrix one(1, 1);
          one(0, 0) = 1;
          ++factored;
          detail::expect(a.solve(one).has_value(),
                         Y.to_string() + " -> " + Z.to_string() + " misses the cokernel of " + at);
        }
      }
    }
    const MorQ f = basic_mor(Obj::parse("M(1/8,1/4)"), Obj::parse("M(1/4,3/4)"));
    detail::expect(detail::as_multiset(kernel(f).object) ==
                       detail::as_multiset({Obj::parse("M(1/2,9/8)"), Obj::parse("M(0,1/4)")}),
                   "worked kernel");
    detail::expect(cokernel(f).object == SumObj{Obj::parse("M(1,3/4)")}, "worked cokernel");
    return std::to_string(basics.size()) + " basic maps, " + std::to_string(factored) +
           " factorizations through " + std::to_string(sampled) + " sampled kernels and cokernels";
  });
}

inline CriterionResult criterion_mono_epi(unsigned k) {
  return detail::run_criterion(7, "mono and epi implies iso", [k] {
    const auto g = grid_off_cluster(k);
    std::size_t n = 0;
    for (const Obj& X : g) {
      for (const Obj& Y : g) {
        if (hom_ct_dim(X, Y) != 1) continue;
        ++n;
        const Classification c = classify(basic_mor(X, Y));
        detail::expect(!(c.is_mono && c.is_epi) || X == Y,
                       X.to_string() + " -> " + Y.to_string() + " is mono and epi");
      }
      // The diagonal into X + X is mono and not epi.
      Matrix d(2, 1);
      d(0, 0) = d(1, 0) = 1;
      const Classification c = classify(make_mor({X}, {X, X}, d));
      ++n;
      detail::expect(c.is_mono && !c.is_epi, "diagonal of " + X.to_string());
    }
    return std::to_string(n) + " maps";
  });
}

inline CriterionResult criterion_mutation(unsigned k) {
  return detail::run_criterion(8, "mutation", [k] {
    const unsigned scan = std::max(5u, k + 2);
    const auto far = cluster_points(scan);
    const auto vs = cluster_points(k);
    for (const ClusterPt& v : vs) {
      const Obj X = object(v);
      const auto [c1, Xs] = mutate(ClusterOverlay{}, X);
      const std::string at = v.to_string();
      detail::expect(!member(Xs), "X* lies in T0 at " + at);
      const auto [c2, back] = mutate(c1, Xs);
      detail::expect(back == X && c2.removed().empty() && c2.added().empty(),
                     "flip is not an involution at " + at);
      for (const ClusterPt& w : far)
        if (w != v)
          detail::expect(compatible(Xs, object(w)),
                         "X* crosses " + w.to_string() + " at " + at);
      detail::expect(support(Xs) == std::set<ClusterPt>{v}, "support(X*) != {v} at " + at);
      // Exchange triangles Y -> A -> Z -> Y[1] with A, Z in T0.
      std::set<std::pair<Obj, Obj>> from_x, from_s;
      for (const Obj& Y : {X, Xs})
        for (const ClusterPt& w : far) {
          const Obj A = object(w);
          if (A == X || hom_c_dim(Y, A) != 1) continue;
          for (auto kind : {TriangleKind::kPositive, TriangleKind::kNegative}) {
            try {
              const auto [Z, W] = triangle_complete(Y, A, kind);
              if (!member(Z) || Z == X || W != Y) continue;
              (Y == X ? from_x : from_s).insert({A, Z});
            } catch (const NotBasicAligned&) {
            }
          }
        }
      std::set<Obj> cx, cs;
      for (const auto& [a, z] : from_x) cx.insert(a), cx.insert(z);
      for (const auto& [a, z] : from_s) cs.insert(a), cs.insert(z);
      detail::expect(from_x.size() == 2 && from_s.size() == 2 && cx.size() == 4 && cx == cs,
                     "exchange triangles at " + at);
    }
    detail::expect(mutate(ClusterPt{0, 0}) == Obj::parse("M(1/2,1/2)"), "mu(0,0)");
    detail::expect(mutate(ClusterPt{1, 0}) == Obj::parse("M(1,3/4)"), "mu(1,0)");
    return std::to_string(vs.size()) + " cluster points";
  });
}

inline CriterionResult criterion_noncrossing(unsigned k) {
  return detail::run_criterion(9, "compatibility is non-crossing", [k] {
    const auto cps = cluster_points(k + 1);
    std::size_t n = 0;
    for (const ClusterPt& a : cps)
      for (const ClusterPt& b : cps) {
        if (a == b) continue;
        ++n;
        const Obj X = object(a), Y = object(b);
        detail::expect(compatible(X, Y) == !ends_cross(X, Y),
                       a.to_string() + ", " + b.to_string());
      }
    return std::to_string(n) + " pairs";
  });
}

inline CriterionResult criterion_digits(unsigned k) {
  return detail::run_criterion(10, "digit lemma", [k] {
    const unsigned base_depth = k >= 1 ? k - 1 : 0;
    const unsigned max_len = 10;
    std::size_t n = 0;
    for (const ClusterPt& v : cluster_points(base_depth)) {
      for (unsigned len = 0; len <= max_len; ++len)
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
          DigitPrefix p{v, {}};
          for (unsigned i = 0; i < len; ++i) p.digits.push_back((bits >> (len - 1 - i)) & 1);
          ++n;
          const Point c = digits_to_coords(p);
          const auto w = classify_point(c);
          detail::expect(w.has_value(), p.to_string() + " leaves T0");
          detail::expect(coords_to_digits(v, *w, max_len) == p, p.to_string() + " round trip");
          if (len > 0) {
            DigitPrefix q{v, {p.digits.begin(), p.digits.end() - 1}};
            const Point prev = digits_to_coords(q);
            detail::expect(prev.y <= c.y && c.x <= prev.x, p.to_string() + " not monotone");
          }
          detail::expect(classify_stream({v, p.digits, {1}}).kind == StreamKind::kRejected,
                         p.to_string() + " then ones accepted");
          const StreamClass z = classify_stream({v, p.digits, {}});
          detail::expect(z.kind == StreamKind::kDyadic && z.b_limit == c.y.to_rational(),
                         p.to_string() + " then zeros");
        }
    }
    return std::to_string(n) + " prefixes";
  });
}

inline CriterionResult criterion_rays(unsigned k) {
  return detail::run_criterion(11, "ray extension and truncation", [k] {
    const auto g = grid_off_cluster(k);
    const unsigned kmax = 3, tail = 6;
    std::vector<StringWord> words;
    for (const Obj& X : g) words.push_back(obj_to_string(X));
    std::size_t n = 0;
    for (const StringWord& w1 : words) {
      std::vector<StringWord> ext;
      for (unsigned j = 0; j <= tail; ++j) {
        StringWord e = g_extend(w1, j);
        if (j <= kmax)
          detail::expect(f_strip(e) == w1, "f_strip(g_extend) at " + w1.to_string());
        e.ray_front = e.ray_back = false;
        ext.push_back(std::move(e));
      }
      for (const StringWord& w2 : words) {
        ++n;
        int prev = -1;
        for (unsigned j = 0; j <= tail; ++j) {
          const int h = hom_dim_strings(ext[j], w2);
          detail::expect(h >= prev, "hom shrinks under extension: " + w1.to_string() + " vs " +
                                        w2.to_string());
          detail::expect(j <= kmax || h == prev,
                         "hom not stable past k=3: " + w1.to_string() + " vs " + w2.to_string());
          prev = h;
        }
      }
    }
    return std::to_string(words.size()) + " words, " + std::to_string(n) + " pairs";
  });
}

inline std::vector<CriterionResult> run_all_criteria(unsigned k) {
  return {criterion_hom_agreement(k), criterion_round_trip(k),  criterion_support(k),
          criterion_approximation(k), criterion_tau(k),         criterion_abelian(k),
          criterion_mono_epi(k),      criterion_mutation(k),    criterion_noncrossing(k),
          criterion_digits(k),        criterion_rays(k)};
}

inline std::string result_line(const CriterionResult& r) {
  std::ostringstream o;
  o << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": "
    << r.detail << " (" << std::fixed << std::setprecision(2) << r.seconds << "s)";
  return o.str();
}

}  // namespace moebius
