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

#include <sstream>

#include "cliquestream/clustering.hpp"
#include "cliquestream/graph.hpp"
#include "cliquestream/instance_io.hpp"
#include "cliquestream/nemesis.hpp"
#include "cliquestream/ratio.hpp"
#include "support.hpp"

namespace cliquestream {
namespace {

using testing::complete_graph;
using testing::graph_from_edges;

TEST(OrderedGraph, AddVertexGrowsOneArrivalAtATime) {
  OrderedGraph g;
  g = add_vertex(g, {0, {}});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
  g = add_vertex(g, {1, {0}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 0));
  g = add_vertex(g, {2, {0, 1}});
  EXPECT_EQ(g.edge_count(), 3u);
  const VertexId all[] = {0, 1, 2};
  EXPECT_TRUE(g.is_clique(all));
}

TEST(OrderedGraph, RejectsMalformedArrivals) {
  OrderedGraph g;
  EXPECT_THROW(g.add_vertex({1, {}}), InvalidArgument);
  g.add_vertex({0, {}});
  EXPECT_THROW(g.add_vertex({1, {1}}), InvalidArgument);
  EXPECT_THROW(g.add_vertex({1, {3}}), InvalidArgument);
  g.add_vertex({1, {0}});
  EXPECT_THROW(g.add_vertex({2, {0, 0}}), InvalidArgument);
  EXPECT_EQ(g.size(), 2u);
}

TEST(OrderedGraph, IsClique) {
  const auto k3 = complete_graph(3);
  const VertexId tri[] = {0, 1, 2};
  EXPECT_TRUE(k3.is_clique(tri));
  const auto p3 = graph_from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(p3.is_clique(tri));
  const VertexId one[] = {2};
  EXPECT_TRUE(p3.is_clique(one));
}

TEST(OrderedGraph, NeighborsSpanBothDirectionsAndGrowPastInitialCapacity) {
  std::vector<ArrivalEvent> events;
  for (VertexId v = 0; v < 200; ++v) {
    ArrivalEvent e{v, {}};
    if (v > 0) e.back_neighbors.push_back(0);
    events.push_back(e);
  }
  const auto g = OrderedGraph::from_events(events);
  EXPECT_EQ(g.degree(0), 199u);
  EXPECT_EQ(g.degree(150), 1u);
  EXPECT_EQ(g.events(), events);
  EXPECT_EQ(g.prefix(10).edge_count(), 9u);
}

TEST(Clustering, SingletonAndDuplicate) {
  Clustering c;
  EXPECT_EQ(c.singleton(0), 0u);
  EXPECT_EQ(c.cluster_count(), 1u);
  EXPECT_THROW(c.singleton(0), IllegalOperation);
}

TEST(Clustering, MergeRequiresClique) {
  const auto k4 = complete_graph(4);
  Clustering c;
  for (VertexId v = 0; v < 4; ++v) c.singleton(v);
  c.merge(k4, 0, 1);
  c.merge(k4, 2, 3);
  EXPECT_EQ(c.profit(), 2);
  EXPECT_EQ(c.merge(k4, 0, 2), 0u);
  EXPECT_EQ(c.profit(), 6);
  EXPECT_EQ(c.cost(k4), 0);
  EXPECT_EQ(c.partition(), (Partition{{0, 1, 2, 3}}));

  const auto p3 = graph_from_edges(3, {{0, 1}, {1, 2}});
  Clustering d;
  for (VertexId v = 0; v < 3; ++v) d.singleton(v);
  EXPECT_THROW(d.merge(p3, 0, 2), IllegalOperation);

  const auto two_edges = graph_from_edges(4, {{0, 1}, {2, 3}});
  Clustering e;
  for (VertexId v = 0; v < 4; ++v) e.singleton(v);
  e.merge(two_edges, 0, 1);
  e.merge(two_edges, 2, 3);
  EXPECT_THROW(e.merge(two_edges, 0, 2), IllegalOperation);
  EXPECT_THROW(e.merge(two_edges, 0, 7), std::exception);
}

TEST(Clustering, MergeAddsProductOfSizes) {
  const auto k6 = complete_graph(6);
  Clustering c;
  for (VertexId v = 0; v < 6; ++v) c.singleton(v);
  c.merge(k6, 0, 1);
  c.merge(k6, 2, 3);
  c.merge(k6, 2, 4);
  const auto before = c.profit();
  c.merge(k6, 0, 2);
  EXPECT_EQ(c.profit(), before + 2 * 3);
}

TEST(Clustering, ProfitAndCost) {
  EXPECT_EQ(partition_profit({{0, 1, 2}}), 3);
  EXPECT_EQ(partition_profit({{0, 1}, {2, 3}}), 2);
  EXPECT_EQ(partition_profit({{0, 1, 2, 3}, {4, 5, 6, 7}}), 12);

  const auto two_edges = graph_from_edges(4, {{0, 1}, {2, 3}});
  Clustering singles;
  for (VertexId v = 0; v < 4; ++v) singles.singleton(v);
  EXPECT_EQ(singles.cost(two_edges), 2);

  const auto inst = greedy_nemesis(8);
  const auto g = OrderedGraph::from_events(inst.events);
  EXPECT_EQ(g.edge_count(), 15u);
  const auto opt = Clustering::from_partition(*inst.reference_clustering);
  EXPECT_EQ(opt.profit(), 12);
  EXPECT_EQ(opt.cost(g), 3);
  EXPECT_EQ(opt.profit() + opt.cost(g), static_cast<std::int64_t>(g.edge_count()));
}

TEST(Clustering, ValidationReportsBrokenPartitions) {
  const auto p3 = graph_from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(validation_error(p3, Clustering::from_partition(Partition{{0, 1}, {2}})), "");
  EXPECT_NE(validation_error(p3, Clustering::from_partition(Partition{{0, 1, 2}})), "");
  EXPECT_NE(validation_error(p3, Clustering::from_partition(Partition{{0, 1}})), "");
  EXPECT_EQ(validation_error(p3, Clustering::from_partition(Partition{{0, 1}}), false), "");
  EXPECT_THROW(validate(p3, Clustering::from_partition(Partition{{0, 2}})), InvariantViolation);
}

TEST(Ratio, ConventionsAndOrdering) {
  EXPECT_EQ(step_ratio(Objective::kMaxProfit, 3, 12), Ratio(4, 1));
  EXPECT_EQ(step_ratio(Objective::kMaxProfit, 0, 0), Ratio(1, 1));
  EXPECT_TRUE(step_ratio(Objective::kMaxProfit, 0, 1).is_infinite());
  EXPECT_EQ(step_ratio(Objective::kMinCost, 28, 1), Ratio(28, 1));
  EXPECT_EQ(step_ratio(Objective::kMinCost, 0, 0), Ratio(1, 1));
  EXPECT_TRUE(step_ratio(Objective::kMinCost, 2, 0).is_infinite());
  EXPECT_THROW(Ratio(0, 0), InvalidArgument);
  EXPECT_EQ(Ratio(6, 4), Ratio(3, 2));
  EXPECT_LT(Ratio(3, 2), Ratio(2, 1));
  EXPECT_LT(Ratio(1000, 1), Ratio::infinite());
  EXPECT_EQ(Ratio(12, 3).to_string(), "4.000");
  EXPECT_EQ(Ratio::infinite().to_string(), "inf");
}

TEST(RatioTrace, WorstIsFirstMaximum) {
  RatioTrace t;
  t.record(1, 1);
  t.record(1, 3);
  t.record(2, 6);
  t.record(2, 4);
  ASSERT_TRUE(t.worst());
  EXPECT_EQ(t.worst()->t, 2u);
  EXPECT_EQ(t.worst()->ratio, Ratio(3, 1));
  EXPECT_FALSE(RatioTrace{}.worst());
}

TEST(InstanceIo, ParsesAndWritesCanonicalForm) {
  const std::string text =
      "# comment\n"
      "v 1 :\n"
      "\n"
      "v 2 : 1\n"
      "v 3: 2 1   # trailing\n";
  const auto events = read_instance_string(text);
  ASSERT_EQ(events.size(), 3u);
  EXPECT_EQ(events[2].back_neighbors, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(write_instance_string(events), "v 1 :\nv 2 : 1\nv 3 : 1 2\n");
  EXPECT_EQ(read_instance_string(write_instance_string(events)), events);
}

TEST(InstanceIo, RejectsBadInput) {
  EXPECT_THROW(read_instance_string("v 2 :\n"), ParseError);
  EXPECT_THROW(read_instance_string("v 1 : 1\n"), ParseError);
  EXPECT_THROW(read_instance_string("v 1 :\nv 2 : 3\n"), ParseError);
  EXPECT_THROW(read_instance_string("v 1 :\nv 2 : 1 1\n"), ParseError);
  EXPECT_THROW(read_instance_string("u 1 :\n"), ParseError);
  EXPECT_THROW(read_instance_string("v 1 :\nv 2 : x\n"), ParseError);
  try {
    read_instance_string("v 1 :\n\nv 3 :\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(InstanceIo, RoundTripsGeneratedInstances) {
  for (std::size_t n = 4; n <= 12; ++n) {
    const auto inst = greedy_nemesis(n);
    std::stringstream ss;
    write_instance(ss, inst.events);
    EXPECT_EQ(read_instance(ss), inst.events);
  }
}

}  // namespace
}  // namespace cliquestream
