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

// SVG pictures of the fundamental domain. Output depends only on the input
// spec: fixed viewport, fixed element order, fixed number formatting.

#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "moebius/cluster.hpp"
#include "moebius/serialize.hpp"
#include "moebius/walk.hpp"

namespace moebius {

struct RenderSpec {
  std::vector<Obj> objects;
  std::vector<Rect> rects;
  std::vector<Obj> walks;
  unsigned cluster_depth = 0;
};

inline RenderSpec render_spec_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("render spec must be an object");
  RenderSpec s;
  if (j.contains("objects")) s.objects = sum_from_json(j.at("objects"));
  if (j.contains("walks")) s.walks = sum_from_json(j.at("walks"));
  if (j.contains("cluster_depth")) {
    if (!j.at("cluster_depth").is_number_unsigned())
      throw ParseError("cluster_depth must be a non-negative integer");
    s.cluster_depth = j.at("cluster_depth").get<unsigned>();
    if (s.cluster_depth > max_depth()) throw DepthLimit("cluster_depth over the depth cap");
  }
  if (j.contains("rects")) {
    for (const auto& r : j.at("rects")) {
      auto coord = [&](const char* key) -> std::pair<Dyadic, Dyadic> {
        if (!r.contains(key) || !r.at(key).is_array() || r.at(key).size() != 2)
          throw ParseError(std::string("rect needs ") + key + ": [lo, hi]");
        return {Dyadic::parse(r.at(key)[0].get<std::string>()),
                Dyadic::parse(r.at(key)[1].get<std::string>())};
      };
      const auto [x_lo, x_hi] = coord("x");
      const auto [y_lo, y_hi] = coord("y");
      Rect rect = Rect::closed(x_lo, x_hi, y_lo, y_hi);
      if (r.contains("open")) {
        const auto& o = r.at("open");
        if (!o.is_array() || o.size() != 4)
          throw ParseError("open must be [x_lo, x_hi, y_lo, y_hi] booleans");
        rect.open_x_lo = o[0].get<bool>();
        rect.open_x_hi = o[1].get<bool>();
        rect.open_y_lo = o[2].get<bool>();
        rect.open_y_hi = o[3].get<bool>();
      }
      s.rects.push_back(rect);
    }
  }
  return s;
}

namespace detail {

constexpr int kScale = 160;
constexpr int kMargin = 20;
constexpr int kXMin = -1, kXMax = 2, kYMin = -1, kYMax = 3;

inline std::string num(double v) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(2) << v;
  return o.str();
}

inline double to_double(const Dyadic& d) { return d.to_rational().convert_to<double>(); }

inline std::string px(const Dyadic& x) { return num((to_double(x) - kXMin) * kScale + kMargin); }
inline std::string py(const Dyadic& y) { return num((kYMax - to_double(y)) * kScale + kMargin); }

inline std::string line(const Dyadic& x1, const Dyadic& y1, const Dyadic& x2, const Dyadic& y2,
                        const std::string& cls) {
  return "<line class=\"" + cls + "\" x1=\"" + px(x1) + "\" y1=\"" + py(y1) + "\" x2=\"" +
         px(x2) + "\" y2=\"" + py(y2) + "\"/>\n";
}

}  // namespace detail

inline std::string render_svg(const RenderSpec& spec) {
  using detail::line;
  using detail::px;
  using detail::py;
  const Dyadic x0(detail::kXMin), x1(detail::kXMax), y0(detail::kYMin), y1(detail::kYMax);
  const int w = (detail::kXMax - detail::kXMin) * detail::kScale + 2 * detail::kMargin;
  const int h = (detail::kYMax - detail::kYMin) * detail::kScale + 2 * detail::kMargin;
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
    << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
    << "<defs>\n"
    << "<marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
       "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#c0392b\"/>"
       "</marker>\n"
    << "<clipPath id=\"view\"><rect x=\"" << px(x0) << "\" y=\"" << py(y1) << "\" width=\""
    << (detail::kXMax - detail::kXMin) * detail::kScale << "\" height=\""
    << (detail::kYMax - detail::kYMin) * detail::kScale << "\"/></clipPath>\n"
    << "<style>\n"
    << ".strip{fill:#eef3fb;stroke:none}\n"
    << ".axis{stroke:#999;stroke-width:1}\n"
    << ".boundary{stroke:#333;stroke-width:1.5;stroke-dasharray:6,4}\n"
    << ".dot{fill:#1f4e9c}\n"
    << ".rect{fill:#f5d76e;fill-opacity:0.3;stroke:none}\n"
    << ".edge-closed{stroke:#b7950b;stroke-width:2}\n"
    << ".edge-open{stroke:#b7950b;stroke-width:2;stroke-dasharray:4,3}\n"
    << ".walk{fill:none;stroke:#c0392b;stroke-width:1.5}\n"
    << ".step{stroke:#c0392b;stroke-width:1.5;marker-end:url(#arrow)}\n"
    << ".vertex{fill:#c0392b}\n"
    << ".object{fill:none;stroke:#117a65;stroke-width:2}\n"
    << "</style>\n"
    << "</defs>\n"
    << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n"
    << "<g clip-path=\"url(#view)\">\n";

  // The strip |y - x| < 1 and its two boundary lines.
  o << "<polygon class=\"strip\" points=\"" << px(x0) << "," << py(x0 - 1) << " " << px(x1)
    << "," << py(x1 - 1) << " " << px(x1) << "," << py(x1 + 1) << " " << px(x0) << ","
    << py(x0 + 1) << "\"/>\n";
  o << line(x0, Dyadic(0), x1, Dyadic(0), "axis") << line(Dyadic(0), y0, Dyadic(0), y1, "axis");
  o << line(x0, x0 - 1, x1, x1 - 1, "boundary") << line(x0, x0 + 1, x1, x1 + 1, "boundary");

  // cluster_depth 0 means no dots, so the empty spec draws only strip and axes.
  if (spec.cluster_depth > 0) {
    std::set<Obj> seen;
    for (const ClusterPt& v : cluster_points(spec.cluster_depth)) {
      const Obj X = object(v);
      if (!seen.insert(X).second) continue;
      const Point c = X.canonical();
      o << "<circle class=\"dot\" cx=\"" << px(c.x) << "\" cy=\"" << py(c.y) << "\" r=\"3\"/>\n";
    }
  }

  for (const Rect& r : spec.rects) {
    o << "<rect class=\"rect\" x=\"" << px(r.x_lo) << "\" y=\"" << py(r.y_hi) << "\" width=\""
      << detail::num(detail::to_double(r.x_hi - r.x_lo) * detail::kScale) << "\" height=\""
      << detail::num(detail::to_double(r.y_hi - r.y_lo) * detail::kScale) << "\"/>\n";
    auto cls = [](bool open) { return open ? "edge-open" : "edge-closed"; };
    o << line(r.x_lo, r.y_lo, r.x_lo, r.y_hi, cls(r.open_x_lo))
      << line(r.x_hi, r.y_lo, r.x_hi, r.y_hi, cls(r.open_x_hi))
      << line(r.x_lo, r.y_lo, r.x_hi, r.y_lo, cls(r.open_y_lo))
      << line(r.x_lo, r.y_hi, r.x_hi, r.y_hi, cls(r.open_y_hi));
  }

  for (const Obj& X : spec.walks) {
    const Walk& wk = walk_of(X);
    o << "<polyline class=\"walk\" points=\"";
    for (std::size_t i = 0; i < wk.vertices.size(); ++i)
      o << (i ? " " : "") << px(wk.vertices[i].rep.x) << "," << py(wk.vertices[i].rep.y);
    o << "\"/>\n";
    // One arrow per T-map, drawn to the edge midpoint in the map's direction.
    for (std::size_t i = 0; i + 1 < wk.vertices.size(); ++i) {
      Point a = wk.vertices[i].rep, b = wk.vertices[i + 1].rep;
      if (!wk.forward(i)) std::swap(a, b);
      o << line(a.x, a.y, (a.x + b.x).half(), (a.y + b.y).half(), "step");
    }
    for (const auto& v : wk.vertices)
      o << "<circle class=\"vertex\" cx=\"" << px(v.rep.x) << "\" cy=\"" << py(v.rep.y)
        << "\" r=\"4\"/>\n";
  }

  for (const Obj& X : spec.objects) {
    const Point c = X.canonical();
    const double cx = (detail::to_double(c.x) - detail::kXMin) * detail::kScale + detail::kMargin;
    const double cy = (detail::kYMax - detail::to_double(c.y)) * detail::kScale + detail::kMargin;
    o << "<rect class=\"object\" x=\"" << detail::num(cx - 5) << "\" y=\"" << detail::num(cy - 5)
      << "\" width=\"10\" height=\"10\"/>\n";
  }

  o << "</g>\n</svg>\n";
  return o.str();
}

}  // namespace moebius
