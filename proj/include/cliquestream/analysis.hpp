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

// Ratio bounds for the doubling strategy and its lower-bound instances.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "cliquestream/errors.hpp"
#include "cliquestream/parameters.hpp"

namespace cliquestream {

// F(a, b, x) = (b - a x)^2 + a x (2 - x) - b; nonnegative for integers
// a, b >= 0 and x in (0, 1].
inline double profvalue_gap(std::int64_t a, std::int64_t b, double x) {
  if (a < 0 || b < 0) throw InvalidArgument("profvalue_gap: a and b must be nonnegative");
  if (!(x > 0.0 && x <= 1.0)) throw InvalidArgument("profvalue_gap: x must lie in (0, 1]");
  const double ad = static_cast<double>(a);
  const double bd = static_cast<double>(b);
  const double d = bd - ad * x;
  return d * d + ad * x * (2.0 - x) - bd;
}

// Asymptotic ratio bound of the doubling strategy for parameters gamma, x.
inline double asymptotic_R(double gamma, double x) {
  if (!(x > 0.0)) throw InvalidArgument("asymptotic_R: x must be positive");
  if (!(x + 1.0 < gamma)) throw InvalidArgument("asymptotic_R: needs x + 1 < gamma");
  return gamma * (gamma * x + x + gamma - 1.0) / (x * (gamma - x - 1.0));
}

// Integer bounds on the profit committed in phase j:
// ceil(g) <= delta <= floor(g + (sqrt(8g + 1) + 1) / 2) with g = gamma^j.
// Phase 0 commits exactly one edge.
struct DeltaBounds {
  std::int64_t min = 1;
  std::int64_t max = 1;
};

inline DeltaBounds delta_bounds(double gamma, std::size_t j) {
  if (!(gamma > 1.0)) throw InvalidArgument("gamma must exceed 1");
  if (j == 0) return {1, 1};
  const long double g = gamma_power(gamma, j);
  const auto lo = phase_threshold(gamma, j);
  const auto hi = static_cast<std::int64_t>(
      std::floor(g + 0.5L * (std::sqrt(8.0L * g + 1.0L) + 1.0L)));
  return {lo, hi};
}

struct RecurrenceRow {
  std::size_t j = 0;
  std::int64_t delta_min = 1;
  std::int64_t delta_max = 1;
  std::int64_t s_min = 1;  // bounds on the total profit after phase j
  std::int64_t s_max = 1;
  double r_prime = 1.0;    // bound on the absolute ratio after phase j
};

inline constexpr double kSeededRPrime1 = 10.0;
inline constexpr std::size_t kMaxTablePhase = 60;

// Rows j = 0..J. From j = 2 on,
//   R'_j = (x + 1) / (x S_{j-1}) * (x S_{j-2} R'_{j-1} + delta_j) + 2,
// evaluated at the bound of each quantity that makes it largest (delta_j
// and S_{j-2} at their maxima, S_{j-1} at its minimum). R'_0 = 1 and
// R'_1 = 10 are fixed.
inline std::vector<RecurrenceRow> recurrence_table(double gamma, double x, std::size_t J) {
  if (J < 1) throw InvalidArgument("recurrence_table: J must be at least 1");
  if (J > kMaxTablePhase) throw InvalidArgument("recurrence_table: J too large");
  if (!(x > 0.0 && x <= 1.0)) throw InvalidArgument("recurrence_table: x must lie in (0, 1]");
  if (!(x + 1.0 < gamma)) throw InvalidArgument("recurrence_table: needs x + 1 < gamma");
  std::vector<RecurrenceRow> rows;
  const long double xl = x;
  for (std::size_t j = 0; j <= J; ++j) {
    RecurrenceRow r;
    r.j = j;
    const DeltaBounds d = delta_bounds(gamma, j);
    r.delta_min = d.min;
    r.delta_max = d.max;
    if (j == 0) {
      r.s_min = r.s_max = 1;
      r.r_prime = 1.0;
    } else {
      r.s_min = rows[j - 1].s_min + d.min;
      r.s_max = rows[j - 1].s_max + d.max;
      if (j == 1) {
        r.r_prime = kSeededRPrime1;
      } else {
        const auto& prev = rows[j - 1];
        const auto& prev2 = rows[j - 2];
        const long double v =
            (xl + 1.0L) / (xl * static_cast<long double>(prev.s_min)) *
                (xl * static_cast<long double>(prev2.s_max) * prev.r_prime +
                 static_cast<long double>(d.max)) +
            2.0L;
        r.r_prime = static_cast<double>(v);
      }
    }
    rows.push_back(r);
  }
  return rows;
}

// Ratio bound rounded up to 3 decimals, as tabulated ("13.185").
inline std::string format_bound(double v) {
  const double up = std::ceil(v * 1000.0 - 1e-6) / 1000.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", up);
  return buf;
}

struct TailBound {
  double alpha_sup = 0.0;
  double beta_sup = 0.0;
  double limit = 0.0;
};

// Fixed point of R = alpha R + beta.
inline double fixed_point_limit(double alpha, double beta) {
  if (!(alpha < 1.0)) throw InvalidArgument("fixed point diverges: alpha >= 1");
  return beta / (1.0 - alpha);
}

inline constexpr std::size_t kTailHorizon = 30;

// Writing the recurrence as R'_j <= alpha_j R'_{j-1} + beta_j with
//   alpha_j = (x + 1) S_{j-2} / S_{j-1},
//   beta_j  = (x + 1) delta_j / (x S_{j-1}) + 2,
// returns the suprema over from_j <= j <= horizon and the fixed point.
inline TailBound tail_bound(double gamma, double x, std::size_t from_j,
                            std::size_t horizon = kTailHorizon) {
  if (from_j < 2) throw InvalidArgument("tail_bound: from_j must be at least 2");
  if (horizon < from_j) throw InvalidArgument("tail_bound: horizon before from_j");
  const auto rows = recurrence_table(gamma, x, horizon);
  TailBound t;
  for (std::size_t j = from_j; j <= horizon; ++j) {
    const double smin = static_cast<double>(rows[j - 1].s_min);
    const double alpha = (x + 1.0) * static_cast<double>(rows[j - 2].s_max) / smin;
    const double beta = (x + 1.0) * static_cast<double>(rows[j].delta_max) / (x * smin) + 2.0;
    t.alpha_sup = std::max(t.alpha_sup, alpha);
    t.beta_sup = std::max(t.beta_sup, beta);
  }
  t.limit = fixed_point_limit(t.alpha_sup, t.beta_sup);
  return t;
}

// Iterates R_j = alpha R_{j-1} + beta from R_start = start for `count`
// steps and returns the values R_{start+1} ..
inline std::vector<double> iterate_bound(double alpha, double beta, double start,
                                         std::size_t count) {
  std::vector<double> out;
  double r = start;
  for (std::size_t i = 0; i < count; ++i) {
    r = alpha * r + beta;
    out.push_back(r);
  }
  return out;
}

enum class LowerBoundCase { kLow, kMiddle, kHigh };

inline LowerBoundCase occ_lb_case(double gamma) {
  if (!(gamma > 1.0)) throw InvalidArgument("occ_lb_formula: gamma must exceed 1");
  if (gamma >= 3.0) return LowerBoundCase::kHigh;
  if (gamma > std::sqrt(3.0)) return LowerBoundCase::kMiddle;
  return LowerBoundCase::kLow;
}

// Lower bound on the doubling strategy's ratio forced by the batch
// instances, for a given gamma.
inline double occ_lb_formula(double gamma) {
  const double g = gamma;
  switch (occ_lb_case(g)) {
    case LowerBoundCase::kHigh:
      return (g * g + 5.0 * g - 2.0) / (g - 1.0);
    case LowerBoundCase::kMiddle:
      return (5.0 * g * g * g + 5.0 * g * g + 8.0 * g - 6.0) / (3.0 * g * (g - 1.0));
    case LowerBoundCase::kLow:
      break;
  }
  return g * (g + 3.0) / (g - 1.0);
}

// Ratio forced by the plain batch instance: gamma (gamma + 3) / (gamma - 1).
inline double occ_plain_ratio(double gamma) {
  if (!(gamma > 1.0)) throw InvalidArgument("gamma must exceed 1");
  return gamma * (gamma + 3.0) / (gamma - 1.0);
}

// Ratio forced by the triangle variant for gamma >= 3.
inline double occ_triangle_ratio(double gamma) {
  if (!(gamma > 1.0)) throw InvalidArgument("gamma must exceed 1");
  return (gamma * gamma + 5.0 * gamma - 2.0) / (gamma - 1.0);
}

}  // namespace cliquestream
