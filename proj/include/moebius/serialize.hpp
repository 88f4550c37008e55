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

// JSON forms of library values. Exact numbers travel as strings ("3/8").

#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "moebius/quotient.hpp"
#include "moebius/walk.hpp"

namespace moebius {

using Json = nlohmann::json;

inline Json to_json(const ClusterPt& v) { return Json::array({v.n, v.m}); }

inline ClusterPt cluster_pt_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer() ||
      j[0].get<std::int64_t>() < 0 || j[1].get<std::int64_t>() < 0)
    throw ParseError("expected [n, m], got " + j.dump());
  const auto n = j[0].get<std::uint64_t>();
  const auto m = j[1].get<std::uint64_t>();
  if (n > 62 || m >= (std::uint64_t{2} << n) || (n == 0 && m == 1))
    throw ParseError("cluster point out of range: " + j.dump());
  return {static_cast<unsigned>(n), m};
}

inline Json to_json(const Point& p) {
  return Json::array({p.x.to_string(), p.y.to_string()});
}

inline Json to_json(const std::set<ClusterPt>& pts) {
  Json a = Json::array();
  for (const auto& v : pts) a.push_back(to_json(v));
  return a;
}

inline Json to_json(const Walk& w) {
  Json a = Json::array();
  for (const auto& v : w.vertices)
    a.push_back({{"pt", to_json(v.pt)}, {"rep", to_json(v.rep)}, {"role", role_name(v.role)}});
  return a;
}

inline Walk walk_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("walk must be an array");
  Walk w;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("pt") || !e.contains("rep") || !e.contains("role"))
      throw ParseError("walk vertex needs pt, rep and role");
    const auto& rep = e.at("rep");
    if (!rep.is_array() || rep.size() != 2) throw ParseError("rep must be [x, y]");
    WalkVertex v;
    v.pt = cluster_pt_from_json(e.at("pt"));
    v.rep = {Dyadic::parse(rep[0].get<std::string>()), Dyadic::parse(rep[1].get<std::string>())};
    const auto role = e.at("role").get<std::string>();
    if (role == "sink") v.role = Role::kSink;
    else if (role == "source") v.role = Role::kSource;
    else if (role == "through") v.role = Role::kThrough;
    else throw ParseError("unknown role '" + role + "'");
    w.vertices.push_back(v);
  }
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
    w.steps.push_back(w.vertices[i].rep.x == w.vertices[i + 1].rep.x ? Step::kVertical
                                                                     : Step::kHorizontal);
  return w;
}

inline std::string rational_string(const Rational& r) {
  return denominator(r) == 1 ? numerator(r).str() : r.str();
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ParseError("expected a rational, got " + j.dump());
  const auto s = j.get<std::string>();
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(BigInt(s.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

inline Json to_json(const SumObj& s) {
  Json a = Json::array();
  for (const Obj& o : s) a.push_back(o.to_string());
  return a;
}

inline SumObj sum_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("object list must be an array");
  SumObj s;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError("objects are strings like \"M(0,1/2)\"");
    s.push_back(Obj::parse(e.get<std::string>()));
  }
  return s;
}

inline Json to_json(const MorQ& f) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < f.entries.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < f.entries.cols(); ++j) row.push_back(rational_string(f.entries(i, j)));
    rows.push_back(row);
  }
  return {{"src", to_json(f.src)}, {"dst", to_json(f.dst)}, {"entries", rows}};
}

inline MorQ mor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("src") || !j.contains("dst") || !j.contains("entries"))
    throw ParseError("morphism needs src, dst and entries");
  const SumObj src = sum_from_json(j.at("src"));
  const SumObj dst = sum_from_json(j.at("dst"));
  const auto& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != dst.size())
    throw ParseError("entries must have one row per dst object");
  Matrix m(dst.size(), src.size());
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != src.size())
      throw ParseError("entries must have one column per src object");
    for (std::size_t k = 0; k < src.size(); ++k) m(i, k) = rational_from_json(rows[i][k]);
  }
  return make_mor(src, dst, m);
}

}  // namespace moebius
