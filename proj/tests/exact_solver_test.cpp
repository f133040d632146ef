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

#include "cliquestream/exact_solver.hpp"
#include "cliquestream/harness/random_graphs.hpp"
#include "cliquestream/nemesis.hpp"
#include "support.hpp"

namespace cliquestream {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::graph_from_edges;

TEST(ExactSolver, SmallGraphs) {
  const auto p3 = graph_from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(max_clique_partition(p3).value, 1);
  const auto k4 = max_clique_partition(complete_graph(4));
  EXPECT_EQ(k4.value, 6);
  EXPECT_EQ(k4.clustering.cluster_count(), 1u);
  EXPECT_TRUE(k4.proven_optimal);
  EXPECT_EQ(max_clique_partition(cycle_graph(5)).value, 2);
  EXPECT_EQ(max_clique_partition(OrderedGraph{}).value, 0);
}

TEST(ExactSolver, GreedyNemesisOptimumIsTwoParityCliques) {
  const auto inst = greedy_nemesis(8);
  const auto r = max_clique_partition(OrderedGraph::from_events(inst.events));
  EXPECT_EQ(r.value, 12);
  EXPECT_EQ(r.clustering.partition(), *inst.reference_clustering);
}

TEST(ExactSolver, MinCost) {
  EXPECT_EQ(min_cost_partition(complete_graph(4)).value, 0);
  EXPECT_EQ(min_cost_partition(cycle_graph(5)).value, 3);
}

TEST(ExactSolver, TiesResolveToFirstAssignmentInVertexOrder) {
  // Path 0-1-2: {0,1},{2} and {0},{1,2} tie; vertex 1 joins 0 first.
  const auto p3 = graph_from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(max_clique_partition(p3).clustering.partition(), (Partition{{0, 1}, {2}}));
}

TEST(ExactSolver, BudgetErrors) {
  EXPECT_THROW(max_clique_partition(complete_graph(21)), BudgetExceeded);
  EXPECT_EQ(max_clique_partition(complete_graph(21), {21, 10'000'000}).value, 210);
  EXPECT_THROW(max_clique_partition(complete_graph(3), {65, 100}), InvalidArgument);
  const auto r = max_clique_partition(cycle_graph(12), {20, 3});
  EXPECT_FALSE(r.proven_optimal);
  EXPECT_EQ(validation_error(cycle_graph(12), r.clustering), "");
  EXPECT_EQ(r.value, r.clustering.profit());
}

TEST(ExactSolver, LargeGraphWithSmallComponents) {
  std::vector<testing::Edge> edges;
  for (VertexId b = 0; b < 400; b += 4) {
    for (VertexId i = 0; i < 4; ++i) {
      for (VertexId j = i + 1; j < 4; ++j) edges.push_back({b + i, b + j});
    }
  }
  EXPECT_EQ(max_clique_partition(graph_from_edges(400, edges)).value, 600);
}

TEST(ExactSolver, InducedSubgraph) {
  const auto k5 = complete_graph(5);
  const VertexId sub[] = {0, 2, 4};
  const auto r = max_clique_partition_induced(k5, sub);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.clustering.partition(), (Partition{{0, 2, 4}}));
}

TEST(BruteForce, SmallGraphsAndLimit) {
  EXPECT_EQ(brute_force_partition(graph_from_edges(2, {{0, 1}})).value, 1);
  EXPECT_EQ(brute_force_partition(graph_from_edges(4, {{0, 1}, {2, 3}})).value, 2);
  EXPECT_EQ(brute_force_partition(cycle_graph(5)).value, 2);
  EXPECT_THROW(brute_force_partition(complete_graph(11)), InvalidArgument);
}

TEST(ExactSolver, AgreesWithBruteForceOnRandomGraphs) {
  for (std::size_t i = 0; i < 600; ++i) {
    Rng rng = sample_rng(77, i);
    const std::size_t n = 1 + uniform_below(rng, 9);
    const auto g = OrderedGraph::from_events(erdos_renyi(rng, n, kEdgeProbabilities[i % 3]));
    const auto bb = max_clique_partition(g);
    const auto bf = brute_force_partition(g);
    ASSERT_EQ(bb.value, bf.value) << "sample " << i;
    ASSERT_EQ(bb.clustering.partition(), bf.clustering.partition()) << "sample " << i;
    ASSERT_EQ(validation_error(g, bb.clustering), "");
  }
}

TEST(ExactSolver, ComponentAdditivityAndEdgeMonotonicity) {
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng = sample_rng(78, i);
    const auto a = OrderedGraph::from_events(erdos_renyi(rng, 7, 0.5));
    const auto b = OrderedGraph::from_events(erdos_renyi(rng, 6, 0.5));
    auto events = a.events();
    for (auto e : b.events()) {
      e.vertex += 7;
      for (auto& u : e.back_neighbors) u += 7;
      events.push_back(e);
    }
    const auto both = OrderedGraph::from_events(events);
    EXPECT_EQ(max_clique_partition(both).value,
              max_clique_partition(a).value + max_clique_partition(b).value);

    // Add one missing edge to a.
    auto more = a.events();
    for (auto& e : more) {
      bool added = false;
      for (VertexId u = 0; u < e.vertex && !added; ++u) {
        if (!a.adjacent(u, e.vertex)) {
          e.back_neighbors.push_back(u);
          std::sort(e.back_neighbors.begin(), e.back_neighbors.end());
          added = true;
        }
      }
      if (added) break;
    }
    EXPECT_GE(max_clique_partition(OrderedGraph::from_events(more)).value,
              max_clique_partition(a).value);
  }
}

}  // namespace
}  // namespace cliquestream
