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

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace moebius {

// Base class of every domain error raised by the library. `kind()` is the
// stable error name printed by the command line tool.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define MOEBIUS_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

MOEBIUS_DEFINE_ERROR(ParseError);
MOEBIUS_DEFINE_ERROR(BandBoundary);
MOEBIUS_DEFINE_ERROR(NotBasicAligned);
MOEBIUS_DEFINE_ERROR(UnboundedRect);
MOEBIUS_DEFINE_ERROR(DepthLimit);
MOEBIUS_DEFINE_ERROR(NotInCluster);
MOEBIUS_DEFINE_ERROR(InCluster);
MOEBIUS_DEFINE_ERROR(NotBasic);
MOEBIUS_DEFINE_ERROR(ShapeMismatch);
MOEBIUS_DEFINE_ERROR(NoMorphism);
MOEBIUS_DEFINE_ERROR(NotAModule);
MOEBIUS_DEFINE_ERROR(InvalidWord);
MOEBIUS_DEFINE_ERROR(Unreachable);

#undef MOEBIUS_DEFINE_ERROR

// Enumeration depth cap. Read once from MOEBIUS_MAX_DEPTH (default 16).
// Cluster points of depth n carry indices below 2^(n+1), so the cap is
// clamped to 62 to keep indices in 64 bits.
inline unsigned max_depth() {
  static const unsigned cap = [] {
    unsigned value = 16;
    if (const char* env = std::getenv("MOEBIUS_MAX_DEPTH")) {
      try {
        const long parsed = std::stol(env);
        if (parsed >= 1) value = static_cast<unsigned>(parsed);
      } catch (const std::exception&) {
      }
    }
    return value > 62 ? 62u : value;
  }();
  return cap;
}

}  // namespace moebius
