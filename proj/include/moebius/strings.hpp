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

// The quiver Q of the tree of triangles, its string words, standard string
// modules and finite-dimensional representations.
//
// A Q-arrow v -> w exists exactly when the irreducible T-map runs w -> v.
// Two arrows of the same triangle compose to zero.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moebius/cluster.hpp"
#include "moebius/error.hpp"
#include "moebius/linalg.hpp"

namespace moebius {

struct QArrow {
  ClusterPt from;
  ClusterPt to;
  TriangleId tri;
  friend bool operator==(const QArrow&, const QArrow&) = default;
};

struct ArrowsAt {
  std::array<QArrow, 2> out;
  std::array<QArrow, 2> in;
};

inline ArrowsAt arrows_at(const ClusterPt& v) {
  const auto tri = neighbors(v);
  ArrowsAt a;
  for (int i = 0; i < 2; ++i) {
    a.out[i] = {v, tri[i].predecessor(v), tri[i].id};
    a.in[i] = {tri[i].successor(v), v, tri[i].id};
  }
  return a;
}

// The Q-arrow from u to w, if there is one.
inline std::optional<QArrow> q_arrow(const ClusterPt& u, const ClusterPt& w) {
  const auto t = shared_triangle(u, w);
  if (!t || t->predecessor(u) != w) return std::nullopt;
  return QArrow{u, w, t->id};
}

enum class Letter { kDirect, kInverse };

struct StringWord {
  std::vector<ClusterPt> v;
  std::vector<Letter> letters;  // letters[i] joins v[i] and v[i + 1]
  bool ray_front = false;
  bool ray_back = false;

  std::size_t size() const { return v.size(); }
  bool empty() const { return v.empty(); }

  // Letters read off Q; throws InvalidWord when neighbours are not adjacent.
  static StringWord from_vertices(std::vector<ClusterPt> verts) {
    StringWord w;
    w.v = std::move(verts);
    for (std::size_t i = 0; i + 1 < w.v.size(); ++i) {
      if (q_arrow(w.v[i], w.v[i + 1])) {
        w.letters.push_back(Letter::kDirect);
      } else if (q_arrow(w.v[i + 1], w.v[i])) {
        w.letters.push_back(Letter::kInverse);
      } else {
        throw InvalidWord(w.v[i].to_string() + " and " + w.v[i + 1].to_string() +
                          " are not joined by an arrow");
      }
    }
    return w;
  }

  StringWord reversed() const {
    StringWord r;
    r.v.assign(v.rbegin(), v.rend());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      r.letters.push_back(*it == Letter::kDirect ? Letter::kInverse : Letter::kDirect);
    r.ray_front = ray_back;
    r.ray_back = ray_front;
    return r;
  }

  StringWord slice(std::size_t i, std::size_t j) const {  // [i, j)
    StringWord s;
    s.v.assign(v.begin() + i, v.begin() + j);
    if (j > i) s.letters.assign(letters.begin() + i, letters.begin() + (j - 1));
    return s;
  }

  std::set<ClusterPt> vertex_set() const { return {v.begin(), v.end()}; }

  friend bool operator==(const StringWord&, const StringWord&) = default;

  bool same_string(const StringWord& o) const { return *this == o || *this == o.reversed(); }

  std::string to_string() const {
    std::string s = ray_front ? "... " : "";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += letters[i - 1] == Letter::kDirect ? " > " : " < ";
      s += v[i].to_string();
    }
    if (ray_back) s += " ...";
    return s;
  }

  // "T(1,0) > T(0,0) < T(1,1)", optionally with "..." marking a ray end.
  static StringWord parse(std::string_view text) {
    StringWord w;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip();
    if (text.substr(i, 3) == "...") {
      w.ray_front = true;
      i += 3;
    }
    bool want_vertex = true;
    while (true) {
      skip();
      if (i >= text.size()) break;
      if (want_vertex) {
        const auto close = text.find(')', i);
        if (close == std::string_view::npos)
          throw ParseError("unterminated vertex in '" + std::string(text) + "'");
        w.v.push_back(ClusterPt::parse(text.substr(i, close + 1 - i)));
        i = close + 1;
        want_vertex = false;
      } else if (text[i] == '>' || text[i] == '<') {
        w.letters.push_back(text[i] == '>' ? Letter::kDirect : Letter::kInverse);
        ++i;
        want_vertex = true;
      } else if (text.substr(i, 3) == "...") {
        w.ray_back = true;
        i += 3;
        skip();
        if (i != text.size()) throw ParseError("text after ray marker in '" + std::string(text) + "'");
        break;
      } else {
        throw ParseError("unexpected '" + std::string(1, text[i]) + "' in '" +
                         std::string(text) + "'");
      }
    }
    if (want_vertex && !w.v.empty())
      throw ParseError("word ends with a letter: '" + std::string(text) + "'");
    return w;
  }
};

struct WordCheck {
  bool ok = true;
  std::string violation;
};

inline WordCheck validate_word(const StringWord& w) {
  if (w.letters.size() + 1 != w.v.size() && !(w.v.empty() && w.letters.empty()))
    return {false, "letter count does not match vertex count"};
  std::set<ClusterPt> seen;
  for (const auto& x : w.v)
    if (!seen.insert(x).second) return {false, "vertex " + x.to_string() + " repeats"};
  std::vector<TriangleId> tris;
  for (std::size_t i = 0; i + 1 < w.v.size(); ++i) {
    const bool direct = w.letters[i] == Letter::kDirect;
    const auto a = direct ? q_arrow(w.v[i], w.v[i + 1]) : q_arrow(w.v[i + 1], w.v[i]);
    if (!a)
      return {false, "no arrow " + (direct ? w.v[i] : w.v[i + 1]).to_string() + " -> " +
                         (direct ? w.v[i + 1] : w.v[i]).to_string()};
    tris.push_back(a->tri);
  }
  for (std::size_t i = 0; i + 1 < tris.size(); ++i)
    if (tris[i] == tris[i + 1])
      return {false, "letters at " + w.v[i + 1].to_string() + " lie in one triangle"};
  return {};
}

// ---------------------------------------------------------------------------
// Graph maps between standard string modules.

// Positions [i, j] in w of a substring whose boundary arrows leave it.
inline bool is_factor(const StringWord& w, std::size_t i, std::size_t j) {
  if (i > 0 && w.letters[i - 1] == Letter::kDirect) return false;
  if (j + 1 < w.size() && w.letters[j] == Letter::kInverse) return false;
  return true;
}

// Positions [i, j] in w of a substring whose boundary arrows enter it.
inline bool is_sub(const StringWord& w, std::size_t i, std::size_t j) {
  if (i > 0 && w.letters[i - 1] == Letter::kInverse) return false;
  if (j + 1 < w.size() && w.letters[j] == Letter::kDirect) return false;
  return true;
}

// A basic morphism w1 ->> W3 >-> w2.
struct GraphMap {
  std::size_t src_lo, src_hi;  // W3 = w1[src_lo..src_hi]
  std::size_t dst_lo, dst_hi;  // same vertices in w2, in either orientation
  std::set<ClusterPt> w3;
};

inline std::vector<GraphMap> graph_maps(const StringWord& w1, const StringWord& w2) {
  std::map<ClusterPt, std::size_t> pos2;
  for (std::size_t p = 0; p < w2.size(); ++p) pos2[w2.v[p]] = p;
  std::vector<GraphMap> out;
  for (std::size_t i = 0; i < w1.size(); ++i) {
    const auto it = pos2.find(w1.v[i]);
    if (it == pos2.end()) continue;
    const std::size_t p = it->second;
    for (int dir : {1, -1}) {
      for (std::size_t j = i; j < w1.size(); ++j) {
        const std::ptrdiff_t q = static_cast<std::ptrdiff_t>(p) + dir * static_cast<std::ptrdiff_t>(j - i);
        if (q < 0 || q >= static_cast<std::ptrdiff_t>(w2.size())) break;
        if (w2.v[q] != w1.v[j]) break;
        if (dir < 0 && j == i) continue;  // single vertices are counted once
        const std::size_t lo = std::min<std::size_t>(p, q), hi = std::max<std::size_t>(p, q);
        if (is_factor(w1, i, j) && is_sub(w2, lo, hi)) {
          GraphMap g{i, j, lo, hi, {}};
          g.w3.insert(w1.v.begin() + i, w1.v.begin() + j + 1);
          out.push_back(std::move(g));
        }
      }
    }
  }
  return out;
}

inline int hom_dim_strings(const StringWord& w1, const StringWord& w2) {
  return static_cast<int>(graph_maps(w1, w2).size());
}

struct KerCoker {
  std::vector<StringWord> kernel;
  std::vector<StringWord> cokernel;
};

inline KerCoker kernel_cokernel_strings(const StringWord& w1, const StringWord& w2) {
  const auto maps = graph_maps(w1, w2);
  if (maps.empty())
    throw NoMorphism(w1.to_string() + " -> " + w2.to_string());
  const GraphMap& g = maps.front();
  KerCoker kc;
  if (g.src_lo > 0) kc.kernel.push_back(w1.slice(0, g.src_lo));
  if (g.src_hi + 1 < w1.size()) kc.kernel.push_back(w1.slice(g.src_hi + 1, w1.size()));
  if (g.dst_lo > 0) kc.cokernel.push_back(w2.slice(0, g.dst_lo));
  if (g.dst_hi + 1 < w2.size()) kc.cokernel.push_back(w2.slice(g.dst_hi + 1, w2.size()));
  return kc;
}

// ---------------------------------------------------------------------------
// Finite-dimensional representations.

struct RepFin {
  std::map<ClusterPt, std::size_t> dim;
  // Arrow u -> w maps to a dim[w] x dim[u] matrix; absent arrows are zero.
  std::map<std::pair<ClusterPt, ClusterPt>, Matrix> arrow;

  std::size_t dim_at(const ClusterPt& v) const {
    const auto it = dim.find(v);
    return it == dim.end() ? 0 : it->second;
  }

  Matrix map_of(const ClusterPt& u, const ClusterPt& w) const {
    const auto it = arrow.find({u, w});
    if (it != arrow.end()) return it->second;
    return Matrix(dim_at(w), dim_at(u));
  }

  std::size_t total_dim() const {
    std::size_t n = 0;
    for (const auto& [v, d] : dim) n += d;
    return n;
  }
};

inline RepFin to_rep(const StringWord& w) {
  RepFin r;
  for (const auto& x : w.v) r.dim[x] = 1;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const bool direct = w.letters[i] == Letter::kDirect;
    const ClusterPt& s = direct ? w.v[i] : w.v[i + 1];
    const ClusterPt& t = direct ? w.v[i + 1] : w.v[i];
    Matrix m(1, 1);
    m(0, 0) = 1;
    r.arrow[{s, t}] = m;
  }
  return r;
}

inline void check_relations(const RepFin& m) {
  for (const auto& [u, w] : m.arrow) {
    (void)w;
    const auto a = q_arrow(u.first, u.second);
    if (!a) throw NotAModule("no arrow " + u.first.to_string() + " -> " + u.second.to_string());
    const auto t = triangle(a->tri);
    // The arrow leaving u.second in the same triangle.
    const ClusterPt next = t.predecessor(u.second);
    const Matrix prod = m.map_of(u.second, next) * m.map_of(u.first, u.second);
    if (!prod.is_zero())
      throw NotAModule("relation fails at " + u.first.to_string() + " -> " +
                       u.second.to_string() + " -> " + next.to_string());
  }
}

struct Decomposition {
  std::vector<StringWord> words;
  // Per vertex, an invertible matrix whose columns are the images of the
  // summand basis vectors, in summand order.
  std::map<ClusterPt, Matrix> iso;
  // column[k][v]: column of summand k in iso[v].
  std::vector<std::map<ClusterPt, std::size_t>> column;
};

namespace detail {

// Every valid string supported inside verts, one orientation each.
inline std::vector<StringWord> strings_within(const std::set<ClusterPt>& verts) {
  std::vector<StringWord> out;
  std::set<std::vector<ClusterPt>> seen;
  std::vector<ClusterPt> path;
  std::vector<TriangleId> tris;
  auto record = [&] {
    std::vector<ClusterPt> rev(path.rbegin(), path.rend());
    if (seen.count(rev) || !seen.insert(path).second) return;
    out.push_back(StringWord::from_vertices(path));
  };
  auto dfs = [&](auto&& self) -> void {
    record();
    const ClusterPt cur = path.back();
    for (const Triangle& t : neighbors(cur)) {
      if (!tris.empty() && tris.back() == t.id) continue;
      for (const ClusterPt& nb : t.pts) {
        if (nb == cur || !verts.count(nb)) continue;
        if (std::find(path.begin(), path.end(), nb) != path.end()) continue;
        path.push_back(nb);
        tris.push_back(t.id);
        self(self);
        path.pop_back();
        tris.pop_back();
      }
    }
  };
  for (const ClusterPt& v : verts) {
    path = {v};
    tris.clear();
    dfs(dfs);
  }
  return out;
}

// Basis of Hom(U, M); column c holds the images of U's basis vectors,
// stacked in U's vertex order.
inline Matrix hom_space(const StringWord& u, const RepFin& m) {
  std::vector<std::size_t> offset;
  std::size_t n = 0;
  for (const auto& x : u.v) {
    offset.push_back(n);
    n += m.dim_at(x);
  }
  std::map<ClusterPt, std::size_t> idx;
  for (std::size_t i = 0; i < u.size(); ++i) idx[u.v[i]] = i;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const ClusterPt& s = u.v[i];
    for (const QArrow& a : arrows_at(s).out) {
      const Matrix ma = m.map_of(s, a.to);
      const auto jt = idx.find(a.to);
      const bool letter = jt != idx.end() &&
                          (jt->second + 1 == i || i + 1 == jt->second);
      // M_a phi_s - [letter] phi_t = 0
      for (std::size_t r = 0; r < ma.rows(); ++r) {
        std::vector<Rational> row(n, Rational(0));
        for (std::size_t c = 0; c < ma.cols(); ++c) row[offset[i] + c] = ma(r, c);
        if (letter) row[offset[jt->second] + r] -= 1;
        rows.push_back(std::move(row));
      }
    }
  }
  Matrix cons(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) cons(r, c) = rows[r][c];
  if (rows.empty()) return Matrix::identity(n);
  return cons.nullspace();
}

inline Decomposition decompose_thin(const RepFin& m) {
  Decomposition d;
  std::map<ClusterPt, std::vector<std::pair<ClusterPt, Rational>>> adj;  // signed scalars
  for (const auto& [key, mat] : m.arrow) {
    if (mat.rows() == 0 || mat.cols() == 0 || mat(0, 0) == 0) continue;
    adj[key.first].push_back({key.second, mat(0, 0)});
    adj[key.second].push_back({key.first, 1 / mat(0, 0)});
  }
  std::set<ClusterPt> done;
  for (const auto& [v, dv] : m.dim) {
    if (dv == 0 || done.count(v)) continue;
    // Walk to one end of the component, then along it.
    ClusterPt start = v;
    {
      std::set<ClusterPt> seen{v};
      ClusterPt cur = v;
      bool moved = true;
      while (moved) {
        moved = false;
        for (const auto& [nb, s] : adj[cur])
          if (!seen.count(nb)) {
            seen.insert(nb);
            cur = nb;
            moved = true;
            break;
          }
      }
      start = cur;
    }
    std::vector<ClusterPt> path{start};
    std::map<ClusterPt, Rational> mu{{start, Rational(1)}};
    done.insert(start);
    ClusterPt cur = start;
    while (true) {
      bool moved = false;
      for (const auto& [nb, s] : adj[cur]) {
        if (done.count(nb)) continue;
        // Basis vector e_nb = mu_cur * s * b_nb, so the letter acts as 1.
        mu[nb] = mu[cur] * s;
        path.push_back(nb);
        done.insert(nb);
        cur = nb;
        moved = true;
        break;
      }
      if (!moved) break;
    }
    // A component with a vertex of degree three would not be a string.
    for (const auto& x : path) {
      std::size_t deg = 0;
      for (const auto& [nb, s] : adj[x]) deg += (s != 0);
      if (deg > 2) throw NotAModule("component at " + x.to_string() + " is not a string");
    }
    StringWord w = StringWord::from_vertices(path);
    if (!validate_word(w).ok) throw NotAModule("component " + w.to_string() + " is not a string");
    std::map<ClusterPt, std::size_t> col;
    for (const auto& x : path) {
      Matrix e(1, 1);
      e(0, 0) = mu[x];
      d.iso[x] = e;
      col[x] = 0;
    }
    d.words.push_back(std::move(w));
    d.column.push_back(std::move(col));
  }
  return d;
}

}  // namespace detail

// Splits M into standard string modules with an explicit isomorphism.
inline Decomposition decompose_rep_full(const RepFin& m) {
  check_relations(m);
  bool thin = true;
  for (const auto& [v, d] : m.dim) thin = thin && d <= 1;
  if (thin) return detail::decompose_thin(m);

  std::set<ClusterPt> verts;
  for (const auto& [v, d] : m.dim)
    if (d > 0) verts.insert(v);
  const auto strs = detail::strings_within(verts);
  const std::size_t n = strs.size();
  Matrix h(n, n), rhs(n, 1);
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i) {
    basis.push_back(detail::hom_space(strs[i], m));
    rhs(i, 0) = static_cast<long>(basis.back().cols());
    for (std::size_t j = 0; j < n; ++j) h(i, j) = hom_dim_strings(strs[i], strs[j]);
  }
  const auto mult = h.solve(rhs);
  if (!mult) throw NotAModule("Hom dimensions are inconsistent");
  std::vector<std::size_t> count(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& c = (*mult)(j, 0);
    if (c < 0 || denominator(c) != 1) throw NotAModule("non-integral multiplicity");
    count[j] = static_cast<std::size_t>(numerator(c));
  }

  std::mt19937 rng(20260918u);
  std::uniform_int_distribution<int> coef(-40, 40);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Decomposition d;
    std::map<ClusterPt, std::vector<std::vector<Rational>>> cols;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t copy = 0; copy < count[j]; ++copy) {
        const StringWord& u = strs[j];
        std::vector<Rational> phi(basis[j].rows(), Rational(0));
        for (std::size_t b = 0; b < basis[j].cols(); ++b) {
          const Rational r = coef(rng);
          for (std::size_t k = 0; k < phi.size(); ++k) phi[k] += r * basis[j](k, b);
        }
        std::map<ClusterPt, std::size_t> col;
        std::size_t off = 0;
        for (const auto& x : u.v) {
          const std::size_t dx = m.dim_at(x);
          col[x] = cols[x].size();
          cols[x].emplace_back(phi.begin() + off, phi.begin() + off + dx);
          off += dx;
        }
        d.words.push_back(u);
        d.column.push_back(std::move(col));
      }
    }
    bool ok = true;
    for (const auto& v : verts) {
      const auto& c = cols[v];
      Matrix iso(m.dim_at(v), c.size());
      for (std::size_t k = 0; k < c.size(); ++k)
        for (std::size_t r = 0; r < c[k].size(); ++r) iso(r, k) = c[k][r];
      if (iso.rows() != iso.cols() || iso.rank() != iso.rows()) {
        ok = false;
        break;
      }
      d.iso[v] = iso;
    }
    if (ok) return d;
  }
  throw NotAModule("could not realize the decomposition");
}

inline std::vector<StringWord> decompose_rep(const RepFin& m) {
  return decompose_rep_full(m).words;
}

// Direct sum of representations; basis vectors of b follow those of a.
inline RepFin direct_sum(const RepFin& a, const RepFin& b) {
  RepFin s;
  std::set<ClusterPt> verts;
  for (const auto& [v, d] : a.dim) verts.insert(v);
  for (const auto& [v, d] : b.dim) verts.insert(v);
  for (const auto& v : verts) s.dim[v] = a.dim_at(v) + b.dim_at(v);
  std::set<std::pair<ClusterPt, ClusterPt>> keys;
  for (const auto& [k, mat] : a.arrow) keys.insert(k);
  for (const auto& [k, mat] : b.arrow) keys.insert(k);
  for (const auto& k : keys) {
    const Matrix ma = a.map_of(k.first, k.second);
    const Matrix mb = b.map_of(k.first, k.second);
    Matrix m(s.dim_at(k.second), s.dim_at(k.first));
    for (std::size_t i = 0; i < ma.rows(); ++i)
      for (std::size_t j = 0; j < ma.cols(); ++j) m(i, j) = ma(i, j);
    for (std::size_t i = 0; i < mb.rows(); ++i)
      for (std::size_t j = 0; j < mb.cols(); ++j) m(ma.rows() + i, ma.cols() + j) = mb(i, j);
    s.arrow[k] = m;
  }
  return s;
}

}  // namespace moebius
