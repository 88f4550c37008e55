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

// Morphisms of the quotient category by T0 between finite direct sums of
// dyadic objects. Entry (i, j) scales the basic morphism src[j] -> dst[i].

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "moebius/band.hpp"
#include "moebius/cluster.hpp"
#include "moebius/equiv.hpp"
#include "moebius/error.hpp"
#include "moebius/linalg.hpp"
#include "moebius/strings.hpp"
#include "moebius/walk.hpp"

namespace moebius {

using SumObj = std::vector<Obj>;

struct MorQ {
  SumObj src;
  SumObj dst;
  Matrix entries;  // dst.size() x src.size()

  friend bool operator==(const MorQ&, const MorQ&) = default;
};

// Drops summands lying in T0 (they vanish in the quotient) and checks that
// every nonzero entry sits on a nonzero Hom space.
inline MorQ make_mor(const SumObj& src, const SumObj& dst, const Matrix& entries) {
  if (entries.rows() != dst.size() || entries.cols() != src.size())
    throw ShapeMismatch("entries are " + std::to_string(entries.rows()) + "x" +
                        std::to_string(entries.cols()) + ", expected " +
                        std::to_string(dst.size()) + "x" + std::to_string(src.size()));
  std::vector<std::size_t> keep_src, keep_dst;
  for (std::size_t j = 0; j < src.size(); ++j)
    if (!member(src[j])) keep_src.push_back(j);
  for (std::size_t i = 0; i < dst.size(); ++i)
    if (!member(dst[i])) keep_dst.push_back(i);
  MorQ f;
  for (auto j : keep_src) f.src.push_back(src[j]);
  for (auto i : keep_dst) f.dst.push_back(dst[i]);
  f.entries = Matrix(keep_dst.size(), keep_src.size());
  for (std::size_t a = 0; a < keep_dst.size(); ++a)
    for (std::size_t b = 0; b < keep_src.size(); ++b) {
      const Rational& c = entries(keep_dst[a], keep_src[b]);
      if (c != 0 && hom_ct_dim(f.src[b], f.dst[a]) == 0)
        throw NotBasic(f.src[b].to_string() + " -> " + f.dst[a].to_string() +
                       " is zero in the quotient");
      f.entries(a, b) = c;
    }
  return f;
}

inline MorQ identity_mor(const SumObj& x) {
  return make_mor(x, x, Matrix::identity(x.size()));
}

inline MorQ zero_mor(const SumObj& x, const SumObj& y) {
  return make_mor(x, y, Matrix(y.size(), x.size()));
}

inline MorQ basic_mor(const Obj& x, const Obj& y, const Rational& c = 1) {
  Matrix m(1, 1);
  m(0, 0) = c;
  return make_mor({x}, {y}, m);
}

inline MorQ compose(const MorQ& g, const MorQ& f) {
  if (f.dst != g.src) throw ShapeMismatch("codomain of f differs from domain of g");
  MorQ h{f.src, g.dst, Matrix(g.dst.size(), f.src.size())};
  for (std::size_t i = 0; i < g.dst.size(); ++i)
    for (std::size_t k = 0; k < f.src.size(); ++k)
      for (std::size_t j = 0; j < f.dst.size(); ++j) {
        if (g.entries(i, j) == 0 || f.entries(j, k) == 0) continue;
        if (composite_survives(f.src[k], f.dst[j], g.dst[i]))
          h.entries(i, k) += g.entries(i, j) * f.entries(j, k);
      }
  return h;
}

inline MorQ scale(const MorQ& f, const Rational& c) {
  MorQ g = f;
  for (std::size_t i = 0; i < g.entries.rows(); ++i)
    for (std::size_t j = 0; j < g.entries.cols(); ++j) g.entries(i, j) *= c;
  return g;
}

inline int hom_dim(const SumObj& a, const SumObj& b) {
  int n = 0;
  for (const Obj& x : a)
    for (const Obj& y : b) n += hom_ct_dim(x, y);
  return n;
}

struct Classification {
  bool is_zero = true;
  bool is_mono = true;
  bool is_epi = true;
  bool is_iso = true;
};

// The matrix of Hom(tau^-1 S, f) on the summands whose support contains S.
inline Matrix induced_matrix(const MorQ& f, const ClusterPt& S) {
  std::vector<Obj> all(f.src);
  all.insert(all.end(), f.dst.begin(), f.dst.end());
  all.push_back(object(S));
  const Obj s_eps = nudge(S, concrete_epsilon(all));
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < f.dst.size(); ++i)
    if (support(f.dst[i]).count(S)) rows.push_back(i);
  for (std::size_t j = 0; j < f.src.size(); ++j)
    if (support(f.src[j]).count(S)) cols.push_back(j);
  Matrix m(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) {
      const Rational& c = f.entries(rows[a], cols[b]);
      if (c != 0 && composite_survives(s_eps, f.src[cols[b]], f.dst[rows[a]])) m(a, b) = c;
    }
  return m;
}

inline Classification classify(const MorQ& f) {
  std::set<ClusterPt> pts;
  for (const Obj& x : f.src)
    for (const auto& s : support(x)) pts.insert(s);
  for (const Obj& y : f.dst)
    for (const auto& s : support(y)) pts.insert(s);
  Classification c;
  for (const ClusterPt& S : pts) {
    const Matrix m = induced_matrix(f, S);
    const std::size_t r = m.rank();
    c.is_zero = c.is_zero && r == 0;
    c.is_mono = c.is_mono && r == m.cols();
    c.is_epi = c.is_epi && r == m.rows();
  }
  c.is_iso = c.is_mono && c.is_epi;
  return c;
}

// ---------------------------------------------------------------------------
// Kernels and cokernels, computed on string modules.

namespace detail {

struct SumRep {
  std::vector<StringWord> words;
  RepFin rep;
  std::vector<std::map<ClusterPt, std::size_t>> index;  // summand, vertex -> basis index
};

inline SumRep sum_rep(const SumObj& objs) {
  SumRep s;
  for (const Obj& o : objs) {
    StringWord w = obj_to_string(o);
    std::map<ClusterPt, std::size_t> idx;
    for (const auto& v : w.v) idx[v] = s.rep.dim[v]++;
    s.words.push_back(std::move(w));
    s.index.push_back(std::move(idx));
  }
  for (std::size_t k = 0; k < s.words.size(); ++k) {
    const StringWord& w = s.words[k];
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const bool direct = w.letters[i] == Letter::kDirect;
      const ClusterPt& a = direct ? w.v[i] : w.v[i + 1];
      const ClusterPt& b = direct ? w.v[i + 1] : w.v[i];
      auto it = s.rep.arrow.find({a, b});
      if (it == s.rep.arrow.end())
        it = s.rep.arrow.emplace(std::make_pair(a, b), Matrix(0, 0)).first;
      it->second = Matrix(0, 0);  // resized below
    }
  }
  for (auto& [key, mat] : s.rep.arrow) {
    mat = Matrix(s.rep.dim_at(key.second), s.rep.dim_at(key.first));
    for (std::size_t k = 0; k < s.words.size(); ++k) {
      const auto& idx = s.index[k];
      const auto ia = idx.find(key.first), ib = idx.find(key.second);
      if (ia == idx.end() || ib == idx.end()) continue;
      // Only word letters act; both vertices adjacent in the word.
      const StringWord& w = s.words[k];
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if ((w.v[i] == key.first && w.v[i + 1] == key.second) ||
            (w.v[i] == key.second && w.v[i + 1] == key.first))
          mat(ib->second, ia->second) = 1;
    }
  }
  return s;
}

// Vertexwise matrices of f between the sum representations.
inline std::map<ClusterPt, Matrix> vertex_maps(const MorQ& f, const SumRep& src,
                                               const SumRep& dst) {
  std::map<ClusterPt, Matrix> out;
  for (const auto& [v, d] : src.rep.dim) out[v] = Matrix(dst.rep.dim_at(v), d);
  for (std::size_t i = 0; i < f.dst.size(); ++i)
    for (std::size_t j = 0; j < f.src.size(); ++j) {
      const Rational& c = f.entries(i, j);
      if (c == 0) continue;
      const auto maps = graph_maps(src.words[j], dst.words[i]);
      if (maps.empty()) throw Error("Internal", "basic map without a graph map");
      for (const auto& v : maps.front().w3)
        out[v](dst.index[i].at(v), src.index[j].at(v)) += c;
    }
  return out;
}

// Scalar of the component u -> w given the images of u's basis vectors.
template <typename Image>
Rational read_scalar(const StringWord& u, const StringWord& w, Image&& image) {
  const auto maps = graph_maps(u, w);
  if (maps.empty()) return 0;
  return image(*maps.front().w3.begin());
}

}  // namespace detail

struct KernelResult {
  SumObj object;
  MorQ map;  // inclusion object -> src, or projection dst -> object
};

inline KernelResult kernel(const MorQ& f) {
  const auto src = detail::sum_rep(f.src);
  const auto dst = detail::sum_rep(f.dst);
  const auto fv = detail::vertex_maps(f, src, dst);
  std::map<ClusterPt, Matrix> basis;
  std::map<ClusterPt, std::vector<std::size_t>> free;
  RepFin k;
  for (const auto& [v, m] : fv) {
    basis[v] = m.rows() == 0 ? Matrix::identity(m.cols()) : m.nullspace();
    free[v] = m.rows() == 0 ? [&] {
      std::vector<std::size_t> all(m.cols());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      return all;
    }()
                            : m.free_columns();
    k.dim[v] = basis[v].cols();
  }
  for (const auto& [key, a] : src.rep.arrow) {
    const Matrix img = a * basis[key.first];
    k.arrow[key] = img.select_rows(free[key.second]);
  }
  const auto dec = decompose_rep_full(k);
  KernelResult r;
  for (const auto& w : dec.words) r.object.push_back(string_to_obj(w));
  Matrix e(f.src.size(), dec.words.size());
  for (std::size_t c = 0; c < dec.words.size(); ++c)
    for (std::size_t j = 0; j < f.src.size(); ++j)
      e(j, c) = detail::read_scalar(dec.words[c], src.words[j], [&](const ClusterPt& v) {
        const Matrix emb = basis[v] * dec.iso.at(v);
        return emb(src.index[j].at(v), dec.column[c].at(v));
      });
  r.map = MorQ{r.object, f.src, e};
  return r;
}

inline KernelResult cokernel(const MorQ& f) {
  const auto src = detail::sum_rep(f.src);
  const auto dst = detail::sum_rep(f.dst);
  const auto fv_src = detail::vertex_maps(f, src, dst);
  std::map<ClusterPt, Matrix> proj;
  std::map<ClusterPt, std::vector<std::size_t>> free;
  RepFin q;
  for (const auto& [v, d] : dst.rep.dim) {
    const auto it = fv_src.find(v);
    const Matrix fvt = it == fv_src.end() ? Matrix(0, d) : it->second.transpose();
    if (fvt.rows() == 0) {
      proj[v] = Matrix::identity(d);
      std::vector<std::size_t> all(d);
      for (std::size_t i = 0; i < d; ++i) all[i] = i;
      free[v] = all;
    } else {
      proj[v] = fvt.nullspace().transpose();
      free[v] = fvt.free_columns();
    }
    q.dim[v] = proj[v].rows();
  }
  for (const auto& [key, a] : dst.rep.arrow) {
    const auto& fu = free[key.first];
    Matrix section(dst.rep.dim_at(key.first), fu.size());
    for (std::size_t c = 0; c < fu.size(); ++c) section(fu[c], c) = 1;
    q.arrow[key] = proj[key.second] * a * section;
  }
  const auto dec = decompose_rep_full(q);
  std::map<ClusterPt, Matrix> coords;  // dst basis -> summand coordinates
  for (const auto& [v, iso] : dec.iso) {
    const auto inv = iso.inverse();
    if (!inv) throw Error("Internal", "decomposition is not invertible");
    coords[v] = *inv * proj[v];
  }
  KernelResult r;
  for (const auto& w : dec.words) r.object.push_back(string_to_obj(w));
  Matrix e(dec.words.size(), f.dst.size());
  for (std::size_t c = 0; c < dec.words.size(); ++c)
    for (std::size_t i = 0; i < f.dst.size(); ++i)
      e(c, i) = detail::read_scalar(dst.words[i], dec.words[c], [&](const ClusterPt& v) {
        return coords[v](dec.column[c].at(v), dst.index[i].at(v));
      });
  r.map = MorQ{f.dst, r.object, e};
  return r;
}

}  // namespace moebius
