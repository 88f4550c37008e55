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

// moebius: command line front end to the library.
//
// Exit codes: 0 success, 1 domain error, 2 parse or usage error.

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "moebius/acceptance.hpp"
#include "moebius/moebius.hpp"
#include "moebius/render.hpp"
#include "moebius/serialize.hpp"

namespace {

using namespace moebius;

std::string join_pts(const std::vector<ClusterPt>& pts) {
  std::string s;
  for (const auto& v : pts) s += (s.empty() ? "" : " ") + v.to_string();
  return s;
}

std::string join_objs(const SumObj& objs) {
  std::string s;
  for (const auto& o : objs) s += (s.empty() ? "" : " + ") + o.to_string();
  return s.empty() ? "0" : s;
}

Json read_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
}

struct Output {
  bool json = false;

  void emit(const std::string& text, const Json& j) const {
    if (json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text << "\n";
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the cluster-tilted category of the Moebius band"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--json", out.json, "Print JSON instead of text");
  std::function<int()> action;

  std::string x_arg, y_arg, word_arg, spec_arg, out_arg;
  std::vector<int> digit_args;
  unsigned depth = 3;

  auto* hom = app.add_subcommand("hom", "Hom dimensions in C and in the quotient");
  hom->add_option("X", x_arg)->required();
  hom->add_option("Y", y_arg)->required();
  hom->callback([&] {
    action = [&] {
      const Obj X = Obj::parse(x_arg), Y = Obj::parse(y_arg);
      const int c = hom_c_dim(X, Y), ct = hom_ct_dim(X, Y);
      out.emit("C: " + std::to_string(c) + ", C/T: " + std::to_string(ct),
               {{"C", c}, {"C/T", ct}});
      return 0;
    };
  });

  auto* sup = app.add_subcommand("support", "Cluster points in the support of X");
  sup->add_option("X", x_arg)->required();
  sup->callback([&] {
    action = [&] {
      const auto s = support(Obj::parse(x_arg));
      out.emit(join_pts({s.begin(), s.end()}), to_json(s));
      return 0;
    };
  });

  auto* walk = app.add_subcommand("walk", "The walk of X with lifts and roles");
  walk->add_option("X", x_arg)->required();
  walk->callback([&] {
    action = [&] {
      const Walk& w = walk_of(Obj::parse(x_arg));
      std::string text;
      for (const auto& v : w.vertices)
        text += v.pt.to_string() + " at " + v.rep.to_string() + " " + role_name(v.role) + "\n";
      text.pop_back();
      out.emit(text, to_json(w));
      return 0;
    };
  });

  auto* approx = app.add_subcommand("approx", "Sources and sinks of the approximation of X");
  approx->add_option("X", x_arg)->required();
  approx->callback([&] {
    action = [&] {
      const Approximation a = approximation(Obj::parse(x_arg));
      Json j{{"sources", Json::array()}, {"sinks", Json::array()}};
      for (const auto& v : a.sources) j["sources"].push_back(to_json(v));
      for (const auto& v : a.sinks) j["sinks"].push_back(to_json(v));
      out.emit("sources: " + join_pts(a.sources) + "\nsinks: " + join_pts(a.sinks), j);
      return 0;
    };
  });

  auto* mut = app.add_subcommand("mutate", "Flip the cluster chord v");
  mut->add_option("v", x_arg)->required();
  mut->callback([&] {
    action = [&] {
      const Obj s = mutate(ClusterPt::parse(x_arg));
      out.emit(s.to_string(), {{"object", s.to_string()}});
      return 0;
    };
  });

  auto* to_str = app.add_subcommand("to-string", "The string word of X");
  to_str->add_option("X", x_arg)->required();
  to_str->callback([&] {
    action = [&] {
      const StringWord w = obj_to_string(Obj::parse(x_arg));
      out.emit(w.to_string(), {{"word", w.to_string()}});
      return 0;
    };
  });

  auto* from_str = app.add_subcommand("from-string", "The object of a string word");
  from_str->add_option("WORD", word_arg)->required();
  from_str->callback([&] {
    action = [&] {
      const Obj X = string_to_obj(StringWord::parse(word_arg));
      out.emit(X.to_string(), {{"object", X.to_string()}});
      return 0;
    };
  });

  auto* simple = app.add_subcommand("simple", "The object of the simple module at v");
  simple->add_option("v", x_arg)->required();
  simple->callback([&] {
    action = [&] {
      const Obj X = simple_object(ClusterPt::parse(x_arg));
      out.emit(X.to_string(), {{"object", X.to_string()}});
      return 0;
    };
  });

  auto kc = [&](bool is_kernel) {
    return [&, is_kernel] {
      action = [&, is_kernel] {
        const MorQ f = mor_from_json(read_json(std::cin));
        const KernelResult r = is_kernel ? kernel(f) : cokernel(f);
        out.emit(join_objs(r.object) + "\n" + r.map.entries.to_string(),
                 {{"object", to_json(r.object)}, {"map", to_json(r.map)}});
        return 0;
      };
    };
  };
  app.add_subcommand("kernel", "Kernel of the morphism read as JSON from stdin")
      ->callback(kc(true));
  app.add_subcommand("cokernel", "Cokernel of the morphism read as JSON from stdin")
      ->callback(kc(false));

  auto* digits = app.add_subcommand("digits", "Coordinates reached by a digit prefix from v");
  digits->add_option("v", x_arg)->required();
  digits->add_option("d", digit_args);
  digits->callback([&] {
    action = [&] {
      const DigitPrefix p{ClusterPt::parse(x_arg), digit_args};
      const Point c = digits_to_coords(p);
      const auto w = classify_point(c);
      const std::string at = w ? w->to_string() : "none";
      Json j{{"prefix", p.to_string()}, {"coords", to_json(c)}, {"case", case_name(case_tag(p.v))}};
      j["point"] = w ? to_json(*w) : Json(nullptr);
      out.emit(p.to_string() + " -> " + c.to_string() + " = " + at + ", " +
                   case_name(case_tag(p.v)),
               j);
      return 0;
    };
  });

  auto* check = app.add_subcommand("check", "Run the property suites on the dyadic grid");
  check->add_option("--depth", depth, "Grid exponent")->check(CLI::Range(1u, 6u));
  check->callback([&] {
    action = [&] {
      const auto results = run_all_criteria(depth);
      bool ok = true;
      Json j = Json::array();
      std::string text;
      for (const auto& r : results) {
        ok = ok && r.pass;
        j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        text += result_line(r) + "\n";
      }
      text.pop_back();
      out.emit(text, j);
      return ok ? 0 : 1;
    };
  });

  auto* render = app.add_subcommand("render", "Draw a render spec (JSON file or stdin) as SVG");
  render->add_option("SPEC", spec_arg, "Spec file; stdin when omitted");
  render->add_option("--out", out_arg, "Output SVG path")->required();
  render->callback([&] {
    action = [&] {
      Json j;
      if (spec_arg.empty()) {
        j = read_json(std::cin);
      } else {
        std::ifstream in(spec_arg);
        if (!in) throw std::runtime_error("cannot read " + spec_arg);
        j = read_json(in);
      }
      const std::string svg = render_svg(render_spec_from_json(j));
      std::ofstream f(out_arg, std::ios::binary);
      if (!f || !(f << svg)) throw std::runtime_error("cannot write " + out_arg);
      out.emit("wrote " + out_arg, {{"out", out_arg}, {"bytes", svg.size()}});
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
