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

#include "cliquestream/harness/random_graphs.hpp"
#include "cliquestream/nemesis.hpp"
#include "cliquestream/online.hpp"
#include "cliquestream/strategies.hpp"
#include "support.hpp"

namespace cliquestream {
namespace {

using testing::events_from_edges;
using testing::replay_checked;

TEST(Greedy, TriangleEndsInOneCluster) {
  GreedyStrategy g;
  const auto c = replay_checked(g, events_from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(c.profit(), 3);
}

TEST(Greedy, NemesisProfits) {
  for (auto [n, profit] : {std::pair<std::size_t, std::int64_t>{8, 3}, {7, 3}, {9, 4}}) {
    GreedyStrategy g;
    EXPECT_EQ(replay_checked(g, greedy_nemesis(n).events).profit(), profit) << "n=" << n;
  }
}

TEST(Greedy, JoinsLargestClusterAndBreaksTiesByAge) {
  // Vertex 3 sees the pair {0,1} and the singleton {2}; it joins the pair.
  const auto events = events_from_edges(4, {{0, 1}, {0, 3}, {1, 3}, {2, 3}});
  GreedyStrategy g;
  const auto c = replay_checked(g, events);
  EXPECT_TRUE(c.co_clustered(0, 3));
  EXPECT_FALSE(c.co_clustered(2, 3));

  // Two isolated vertices then one adjacent to both: the older one wins.
  GreedyStrategy h;
  const auto d = replay_checked(h, events_from_edges(3, {{0, 2}, {1, 2}}));
  EXPECT_TRUE(d.co_clustered(0, 2));
}

TEST(Greedy, TiebreakPicksOldest) {
  const ClusterId two[] = {4, 1};
  EXPECT_EQ(greedy_tiebreak(two), 1u);
  const ClusterId one[] = {7};
  EXPECT_EQ(greedy_tiebreak(one), 7u);
  EXPECT_THROW(greedy_tiebreak({}), InvalidArgument);
}

TEST(Greedy, EdgelessInstanceHasUnitRatios) {
  GreedyStrategy g;
  const auto trace = run_online(g, events_from_edges(5, {}), Objective::kMaxProfit,
                                OptSource::exact());
  for (const auto& s : trace.steps) EXPECT_EQ(s.ratio, Ratio(1, 1));
}

TEST(Greedy, NemesisWorstRatioIsHalfN) {
  GreedyStrategy g;
  const auto trace = run_online(g, greedy_nemesis(8).events, Objective::kMaxProfit,
                                OptSource::exact());
  EXPECT_EQ(trace.worst()->ratio, Ratio(4, 1));
  EXPECT_EQ(trace.steps.back().ratio, Ratio(4, 1));
}

// After every step no two clusters can be merged.
bool has_mergeable_pair(const OrderedGraph& g, const Clustering& c) {
  const auto ids = c.cluster_ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      bool ok = true;
      for (VertexId a : c.members(ids[i])) {
        for (VertexId b : c.members(ids[j])) ok = ok && g.adjacent(a, b);
      }
      if (ok) return true;
    }
  }
  return false;
}

TEST(GreedyNp, NeverLeavesMergeablePairsAndMatchesGreedy) {
  for (std::size_t i = 0; i < 300; ++i) {
    Rng rng = sample_rng(5, i);
    const auto events = erdos_renyi(rng, 1 + uniform_below(rng, 12), kEdgeProbabilities[i % 3]);
    GreedyStrategy np(true);
    GreedyStrategy plain(false);
    OnlineRun a(np);
    OnlineRun b(plain);
    for (const auto& e : events) {
      a.step(e);
      b.step(e);
      ASSERT_FALSE(has_mergeable_pair(a.graph(), a.clustering())) << "sample " << i;
      ASSERT_EQ(a.clustering().partition(), b.clustering().partition()) << "sample " << i;
    }
  }
}

class ScriptedStrategy : public OnlineStrategy {
 public:
  explicit ScriptedStrategy(std::vector<ClusterOp> ops) : ops_(std::move(ops)) {}
  std::string name() const override { return "scripted"; }
  std::vector<ClusterOp> observe(const ArrivalEvent&, const OrderedGraph&,
                                 const Clustering&) override {
    return ops_;
  }

 private:
  std::vector<ClusterOp> ops_;
};

TEST(OnlineRun, EnforcesOperationOrder) {
  ScriptedStrategy none({});
  EXPECT_THROW(OnlineRun(none).step({0, {}}), IllegalOperation);
  ScriptedStrategy wrong({ClusterOp::singleton(3)});
  EXPECT_THROW(OnlineRun(wrong).step({0, {}}), IllegalOperation);
  ScriptedStrategy twice({ClusterOp::singleton(0), ClusterOp::singleton(0)});
  EXPECT_THROW(OnlineRun(twice).step({0, {}}), IllegalOperation);
}

TEST(RunOnline, AnalyticLengthMustMatch) {
  GreedyStrategy g;
  EXPECT_THROW(run_online(g, greedy_nemesis(5).events, Objective::kMaxProfit,
                          OptSource::analytic_values({1, 2})),
               InvalidArgument);
}

TEST(Occ, PhaseZeroFiresOnFirstEdge) {
  OccStrategy occ;
  OnlineRun run(occ);
  run.step({0, {}});
  EXPECT_EQ(occ.state().j, 0u);
  EXPECT_EQ(occ.state().pool, (std::vector<VertexId>{0}));
  run.step({1, {0}});
  ASSERT_EQ(occ.phases().size(), 1u);
  EXPECT_EQ(occ.phases()[0].delta, 1);
  EXPECT_EQ(occ.phases()[0].trigger_step, 2u);
  EXPECT_TRUE(run.clustering().co_clustered(0, 1));
  EXPECT_EQ(occ.state().j, 1u);
  EXPECT_EQ(occ.state().threshold, 4);
  EXPECT_TRUE(occ.state().pool.empty());
}

TEST(Occ, BelowThresholdDoesNotCommit) {
  // After phase 0, a matching of three edges stays below ceil(gamma) = 4.
  OccStrategy occ;
  OnlineRun run(occ);
  for (const auto& e : events_from_edges(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}})) run.step(e);
  EXPECT_EQ(occ.phases().size(), 1u);
  EXPECT_EQ(occ.pool_value(), 3);
  EXPECT_EQ(run.clustering().profit(), 1);
}

TEST(Occ, CommitsWholeBatchesOnItsNemesis) {
  const double gamma = kAsymptoticPreset.gamma;
  const auto nem = occ_nemesis(gamma, 4, OccVariant::kPlain);
  OccStrategy occ(gamma);
  OnlineRun run(occ);
  std::size_t t = 0;
  std::int64_t committed = 0;
  std::size_t phase = 0;
  Clustering previous;
  for (const auto& e : nem.instance.events) {
    run.step(e);
    ++t;
    if (phase < nem.batch_end.size() && t == nem.batch_end[phase]) {
      committed += nem.batch_edges[phase];
      ++phase;
    }
    ASSERT_EQ(occ.phases().size(), phase) << "t=" << t;
    ASSERT_EQ(run.clustering().profit(), committed) << "t=" << t;
    ASSERT_TRUE(refines(previous, run.clustering()));
    previous = run.clustering();
  }
  // Every cluster is a batch edge: nothing from different phases was joined.
  for (ClusterId c : run.clustering().cluster_ids()) {
    EXPECT_LE(run.clustering().cluster_size(c), 2u);
  }
}

TEST(Occ, PhaseProfitsStayWithinIntegerBounds) {
  const double gamma = kAsymptoticPreset.gamma;
  for (std::size_t i = 0; i < 60; ++i) {
    Rng rng = sample_rng(9, i);
    const auto events = erdos_renyi(rng, 10 + uniform_below(rng, 11), 0.3);
    OccStrategy occ(gamma);
    replay_checked(occ, events);
    std::int64_t sum = 0;
    for (const auto& p : occ.phases()) {
      const long double g = gamma_power(gamma, p.phase);
      const auto hi = static_cast<std::int64_t>(std::floor(g + 0.5L * (std::sqrt(8 * g + 1) + 1)));
      EXPECT_GE(p.delta, phase_threshold(gamma, p.phase));
      if (p.phase > 0) {
        EXPECT_LE(p.delta, hi);
      }
      sum += p.delta;
      EXPECT_EQ(p.cumulative, sum);
    }
  }
}

TEST(Occ, RejectsBadGammaAndPropagatesBudget) {
  EXPECT_THROW(OccStrategy(1.0), InvalidArgument);
  OccStrategy occ(kAsymptoticPreset.gamma, {3, 1000});
  OnlineRun run(occ);
  // A star on four vertices: the pool component reaches 4 > 3.
  const auto events = events_from_edges(6, {{0, 1}, {2, 5}, {3, 5}, {4, 5}});
  EXPECT_THROW(
      {
        for (const auto& e : events) run.step(e);
      },
      BudgetExceeded);
}

TEST(MakeStrategy, KnownNames) {
  EXPECT_EQ(make_strategy("greedy")->name(), "greedy");
  EXPECT_EQ(make_strategy("greedy-np")->name(), "greedy-np");
  EXPECT_EQ(make_strategy("occ")->name(), "occ");
  EXPECT_THROW(make_strategy("random"), InvalidArgument);
}

TEST(Parameters, ThresholdsAndPresets) {
  EXPECT_EQ(phase_threshold(kAsymptoticPreset.gamma, 0), 1);
  EXPECT_EQ(phase_threshold(kAsymptoticPreset.gamma, 3), 37);
  EXPECT_EQ(phase_threshold(2.0, 10), 1024);
  EXPECT_THROW(phase_threshold(1.0, 2), InvalidArgument);
  EXPECT_THROW(phase_threshold(10.0, 40), InvalidArgument);
  EXPECT_DOUBLE_EQ(preset_by_name("absolute").gamma, 4.02323428);
  EXPECT_NEAR(kAsymptoticPreset.gamma, (3 + std::sqrt(13.0)) / 2, 1e-12);
  EXPECT_NEAR(kAsymptoticPreset.x, (5 - std::sqrt(13.0)) / 2, 1e-12);
  EXPECT_THROW(preset_by_name("other"), InvalidArgument);
}

}  // namespace
}  // namespace cliquestream
