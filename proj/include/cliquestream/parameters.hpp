// Copyright 2026 The CliqueStream Authors
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

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "cliquestream/errors.hpp"

namespace cliquestream {

// Doubling parameter gamma of the phase strategy, and the analysis
// parameter x it is tuned against.
struct OccParameters {
  double gamma;
  double x;
};

// gamma = (3 + sqrt 13) / 2, x = (5 - sqrt 13) / 2: minimizes the
// asymptotic ratio bound.
inline constexpr OccParameters kAsymptoticPreset{3.302775637731995,
                                                 0.697224362268005};

// Trades a slightly larger asymptotic bound for a smaller absolute one.
inline constexpr OccParameters kAbsolutePreset{4.02323428, 0.823889};

inline OccParameters preset_by_name(std::string_view name) {
  if (name == "asymptotic") return kAsymptoticPreset;
  if (name == "absolute") return kAbsolutePreset;
  throw InvalidArgument("unknown preset '" + std::string(name) +
                        "' (expected asymptotic|absolute)");
}

// gamma^j evaluated in extended precision.
inline long double gamma_power(double gamma, std::size_t j) {
  return std::pow(static_cast<long double>(gamma), static_cast<long double>(j));
}

// Integral profit threshold ceil(gamma^j) that ends phase j. Profits are
// integers, so reaching gamma^j and reaching its ceiling coincide.
inline std::int64_t phase_threshold(double gamma, std::size_t j) {
  if (!(gamma > 1.0)) throw InvalidArgument("gamma must exceed 1");
  const long double p = std::ceil(gamma_power(gamma, j));
  if (p >= static_cast<long double>(std::numeric_limits<std::int64_t>::max())) {
    throw InvalidArgument("gamma^" + std::to_string(j) + " overflows int64");
  }
  return static_cast<std::int64_t>(p);
}

}  // namespace cliquestream
