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

#include <compare>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliquestream/errors.hpp"

namespace cliquestream {

enum class Objective { kMaxProfit, kMinCost };

inline std::string_view to_string(Objective o) {
  return o == Objective::kMaxProfit ? "max" : "min";
}

inline Objective parse_objective(std::string_view s) {
  if (s == "max") return Objective::kMaxProfit;
  if (s == "min") return Objective::kMinCost;
  throw InvalidArgument("unknown objective '" + std::string(s) + "'");
}

// Non-negative exact ratio num/den in lowest terms. den == 0 encodes
// infinity (always stored as 1/0).
class Ratio {
 public:
  constexpr Ratio() = default;

  Ratio(std::int64_t num, std::int64_t den) {
    if (num < 0 || den < 0) throw InvalidArgument("ratio must be non-negative");
    if (den == 0) {
      if (num == 0) throw InvalidArgument("0/0 is not a ratio");
      num_ = 1;
      den_ = 0;
      return;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  static Ratio infinite() { return Ratio(1, 0); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }

  double value() const {
    if (is_infinite()) return std::numeric_limits<double>::infinity();
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Decimal rendering; "inf" for infinity.
  std::string to_string(int places = 3) const {
    if (is_infinite()) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, value());
    return buf;
  }

  friend bool operator==(const Ratio&, const Ratio&) = default;

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
};

// Competitive ratio at a single step. For profit it is OPT / strategy, for
// cost strategy / OPT. Degenerate cases: both zero gives 1; a zero
// denominator otherwise gives infinity.
inline Ratio step_ratio(Objective objective, std::int64_t strategy_value,
                        std::int64_t optimal_value) {
  const std::int64_t num =
      objective == Objective::kMaxProfit ? optimal_value : strategy_value;
  const std::int64_t den =
      objective == Objective::kMaxProfit ? strategy_value : optimal_value;
  if (num == 0 && den == 0) return Ratio(1, 1);
  return Ratio(num, den);
}

struct TraceStep {
  std::size_t t = 0;  // 1-based step (number of revealed vertices)
  std::int64_t strategy_value = 0;
  std::int64_t optimal_value = 0;
  Ratio ratio;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct RatioTrace {
  Objective objective = Objective::kMaxProfit;
  std::vector<TraceStep> steps;

  void record(std::int64_t strategy_value, std::int64_t optimal_value) {
    steps.push_back(TraceStep{steps.size() + 1, strategy_value, optimal_value,
                              step_ratio(objective, strategy_value, optimal_value)});
  }

  // First step attaining the maximum ratio; nullopt for an empty trace.
  std::optional<TraceStep> worst() const {
    std::optional<TraceStep> best;
    for (const auto& s : steps) {
      if (!best || s.ratio > best->ratio) best = s;
    }
    return best;
  }

  friend bool operator==(const RatioTrace&, const RatioTrace&) = default;
};

}  // namespace cliquestream
