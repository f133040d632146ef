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

#include <algorithm>
#include <utility>
#include <vector>

#include "cliquestream/clustering.hpp"
#include "cliquestream/graph.hpp"
#include "cliquestream/online.hpp"

namespace cliquestream::testing {

using Edge = std::pair<VertexId, VertexId>;

// Events for vertices 0..n-1 arriving in label order.
inline std::vector<ArrivalEvent> events_from_edges(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<ArrivalEvent> events(n);
  for (std::size_t v = 0; v < n; ++v) events[v].vertex = static_cast<VertexId>(v);
  for (auto [a, b] : edges) {
    if (a > b) std::swap(a, b);
    events[b].back_neighbors.push_back(a);
  }
  for (auto& e : events) std::sort(e.back_neighbors.begin(), e.back_neighbors.end());
  return events;
}

inline OrderedGraph graph_from_edges(std::size_t n, const std::vector<Edge>& edges) {
  return OrderedGraph::from_events(events_from_edges(n, edges));
}

inline OrderedGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return graph_from_edges(n, edges);
}

inline OrderedGraph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) edges.push_back({u, static_cast<VertexId>((u + 1) % n)});
  return graph_from_edges(n, edges);
}

// Plays `events` and returns the final clustering, checking after every step
// that clusters are cliques and that the partition only coarsens.
inline Clustering replay_checked(OnlineStrategy& strategy, const std::vector<ArrivalEvent>& events) {
  OnlineRun run(strategy);
  Clustering previous;
  for (const auto& e : events) {
    run.step(e);
    validate(run.graph(), run.clustering());
    if (!refines(previous, run.clustering())) throw InvariantViolation("partition split");
    previous = run.clustering();
  }
  return run.clustering();
}

}  // namespace cliquestream::testing
