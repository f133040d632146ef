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

#include <gtest/gtest.h>

#include <cmath>

#include "cliquestream/analysis.hpp"

namespace cliquestream {
namespace {

const double kGamma = kAsymptoticPreset.gamma;
const double kX = kAsymptoticPreset.x;

TEST(ProfvalueGap, ClosedForms) {
  for (std::int64_t b = 0; b <= 10; ++b) {
    EXPECT_DOUBLE_EQ(profvalue_gap(0, b, 0.3), static_cast<double>(b * (b - 1)));
  }
  for (double x : {0.1, 0.5, 1.0}) EXPECT_NEAR(profvalue_gap(1, 2, x), 2.0 - 2.0 * x, 1e-12);
  EXPECT_DOUBLE_EQ(profvalue_gap(5, 3, 0.5), 1.0);
}

TEST(ProfvalueGap, RejectsOutOfDomain) {
  EXPECT_THROW(profvalue_gap(1, 1, 0.0), InvalidArgument);
  EXPECT_THROW(profvalue_gap(1, 1, 1.5), InvalidArgument);
  EXPECT_THROW(profvalue_gap(-1, 1, 0.5), InvalidArgument);
}

TEST(AsymptoticR, PresetsAndGuard) {
  EXPECT_NEAR(asymptotic_R(kGamma, kX), (47.0 + 13.0 * std::sqrt(13.0)) / 6.0, 1e-9);
  EXPECT_NEAR(asymptotic_R(kGamma, kX), 15.6455, 1e-3);
  EXPECT_NEAR(asymptotic_R(kAbsolutePreset.gamma, kAbsolutePreset.x), 15.902, 1e-3);
  EXPECT_THROW(asymptotic_R(2.0, 1.0), InvalidArgument);
  EXPECT_NO_THROW(asymptotic_R(3.0, 1.9));
}

TEST(AsymptoticR, GridMinimumNearPreset) {
  double best = 1e9, bg = 0, bx = 0;
  for (double g = 3.20; g <= 3.40; g += 1e-3) {
    for (double x = 0.60; x <= 0.80; x += 1e-3) {
      const double r = asymptotic_R(g, x);
      if (r < best) best = r, bg = g, bx = x;
    }
  }
  EXPECT_NEAR(best, 15.6455, 1e-3);
  EXPECT_NEAR(bg, 3.3028, 2e-3);
  EXPECT_NEAR(bx, 0.6972, 2e-3);
}

TEST(DeltaBounds, PhaseZeroAndEnvelope) {
  EXPECT_EQ(delta_bounds(kGamma, 0).min, 1);
  EXPECT_EQ(delta_bounds(kGamma, 0).max, 1);
  for (std::size_t j = 1; j <= 12; ++j) {
    const auto d = delta_bounds(kGamma, j);
    EXPECT_EQ(d.min, phase_threshold(kGamma, j));
    EXPECT_LE(d.min, d.max);
  }
}

TEST(RecurrenceTable, MatchesTabulatedRows) {
  const std::int64_t s[9][2] = {{1, 1},     {5, 7},       {16, 23},     {53, 68},    {172, 202},
                                {566, 623}, {1864, 1972}, {6152, 6352}, {20311, 20679}};
  const char* r[9] = {"1.000",  "10.000", "13.185", "18.636", "21.881",
                      "22.641", "21.516", "19.925", "18.509"};
  const auto rows = recurrence_table(kGamma, kX, 8);
  ASSERT_EQ(rows.size(), 9u);
  for (std::size_t j = 0; j < 9; ++j) {
    EXPECT_EQ(rows[j].s_min, s[j][0]) << "j=" << j;
    EXPECT_EQ(rows[j].s_max, s[j][1]) << "j=" << j;
    EXPECT_EQ(format_bound(rows[j].r_prime), r[j]) << "j=" << j;
  }
}

TEST(RecurrenceTable, PeakAndTail) {
  const auto rows = recurrence_table(kGamma, kX, kTailHorizon);
  const auto peak = std::max_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.r_prime < b.r_prime;
  });
  EXPECT_EQ(peak->j, 5u);
  EXPECT_EQ(format_bound(peak->r_prime), "22.641");
  for (std::size_t j = 9; j <= kTailHorizon; ++j) EXPECT_LE(rows[j].r_prime, 20.0) << "j=" << j;
}

TEST(RecurrenceTable, RejectsBadParameters) {
  EXPECT_THROW(recurrence_table(kGamma, kX, 0), InvalidArgument);
  EXPECT_THROW(recurrence_table(kGamma, 1.5, 4), InvalidArgument);
  EXPECT_THROW(recurrence_table(1.5, 0.6, 4), InvalidArgument);
  EXPECT_THROW(recurrence_table(kGamma, kX, kMaxTablePhase + 1), InvalidArgument);
}

TEST(FormatBound, RoundsUp) {
  EXPECT_EQ(format_bound(13.1841), "13.185");
  EXPECT_EQ(format_bound(10.0), "10.000");
  EXPECT_EQ(format_bound(22.6405), "22.641");
}

TEST(TailBound, CoefficientsFromPhaseEight) {
  const auto t = tail_bound(kGamma, kX, 8);
  EXPECT_LT(t.alpha_sup, 0.6);
  EXPECT_LT(t.beta_sup, 8.0);
  EXPECT_LE(t.limit, 20.0);
  const auto it = iterate_bound(0.6, 8.0, recurrence_table(kGamma, kX, 8)[8].r_prime, 22);
  for (double v : it) EXPECT_LE(v, 20.0);
}

TEST(TailBound, Errors) {
  EXPECT_THROW(tail_bound(kGamma, kX, 1), InvalidArgument);
  EXPECT_THROW(tail_bound(kGamma, kX, 10, 9), InvalidArgument);
  // gamma barely above x + 1: alpha_j tends to (x + 1) / gamma ~ 1.
  EXPECT_THROW(tail_bound(1.71, 0.7, 2), InvalidArgument);
}

TEST(FixedPoint, Arithmetic) {
  EXPECT_DOUBLE_EQ(fixed_point_limit(0.5, 4.0), 8.0);
  EXPECT_DOUBLE_EQ(fixed_point_limit(0.6, 8.0), 20.0);
  EXPECT_THROW(fixed_point_limit(1.0, 4.0), InvalidArgument);
}

TEST(OccLowerBound, Cases) {
  EXPECT_DOUBLE_EQ(occ_lb_formula(3.0), 11.0);
  EXPECT_NEAR(occ_lb_formula(3.0 - 1e-9), 11.0, 1e-6);
  EXPECT_NEAR(occ_lb_formula(std::sqrt(3.0)), 11.196, 1e-3);
  EXPECT_EQ(occ_lb_case(std::sqrt(3.0)), LowerBoundCase::kLow);
  EXPECT_EQ(occ_lb_case(2.0), LowerBoundCase::kMiddle);
  EXPECT_THROW(occ_lb_formula(1.0), InvalidArgument);
  double lo = 1e9;
  for (double g = 1.74; g < 3.0; g += 1e-4) lo = std::min(lo, occ_lb_formula(g));
  EXPECT_NEAR(lo, 10.927, 1e-3);
  double plain = 1e9;
  for (double g = 1.01; g < 8.0; g += 1e-3) plain = std::min(plain, occ_plain_ratio(g));
  EXPECT_NEAR(plain, 9.0, 1e-3);
  EXPECT_NEAR(occ_plain_ratio(kGamma), 9.04, 0.01);
}

}  // namespace
}  // namespace cliquestream
