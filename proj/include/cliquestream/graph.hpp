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
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cliquestream/errors.hpp"

namespace cliquestream {

// Arrival position of a vertex, 0-based. Rendered 1-based in every
// human-facing output.
using VertexId = std::uint32_t;

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

// A vertex together with its edges to all earlier vertices.
struct ArrivalEvent {
  VertexId vertex = 0;
  std::vector<VertexId> back_neighbors;

  friend bool operator==(const ArrivalEvent&, const ArrivalEvent&) = default;
};

// An undirected simple graph whose vertices are numbered by arrival.
//
// Adjacency rows are bitsets sized to a shared capacity that doubles on
// demand, so `add_vertex` is amortized O(n / 64 + deg).
class OrderedGraph {
 public:
  OrderedGraph() = default;

  std::size_t size() const { return back_.size(); }
  std::size_t edge_count() const { return edges_; }

  // Appends `event.vertex`, which must equal size(). Neighbor lists may be
  // given in any order; duplicates are rejected.
  void add_vertex(const ArrivalEvent& event) {
    const std::size_t n = size();
    if (event.vertex != n) {
      throw InvalidArgument("out-of-order arrival: expected vertex " +
                            std::to_string(n) + ", got " +
                            std::to_string(event.vertex));
    }
    std::vector<VertexId> back = event.back_neighbors;
    std::sort(back.begin(), back.end());
    for (std::size_t i = 0; i < back.size(); ++i) {
      if (back[i] >= n) {
        throw InvalidArgument("vertex " + std::to_string(n) +
                              " lists neighbor " + std::to_string(back[i]) +
                              " that has not arrived yet");
      }
      if (i > 0 && back[i] == back[i - 1]) {
        throw InvalidArgument("duplicate neighbor " + std::to_string(back[i]) +
                              " for vertex " + std::to_string(n));
      }
    }
    reserve(n + 1);
    for (VertexId u : back) {
      adjacency_[u].set(n);
      adjacency_[n].set(u);
    }
    edges_ += back.size();
    back_.push_back(std::move(back));
  }

  bool adjacent(VertexId u, VertexId v) const {
    check(u);
    check(v);
    return adjacency_[u].test(v);
  }

  // Neighbors of `v` that arrived before it, ascending.
  std::span<const VertexId> back_neighbors(VertexId v) const {
    check(v);
    return back_[v];
  }

  // Full neighborhood as a bitset. Its size is the internal capacity, which
  // is at least size(); bits beyond size() are always clear.
  const VertexSet& neighbors(VertexId v) const {
    check(v);
    return adjacency_[v];
  }

  std::size_t degree(VertexId v) const { return neighbors(v).count(); }

  // Empty vertex set sized for use with `neighbors`.
  VertexSet make_set() const { return VertexSet(capacity_); }

  bool is_clique(std::span<const VertexId> vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      check(vs[i]);
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (vs[i] == vs[j] || !adjacency_[vs[i]].test(vs[j])) return false;
      }
    }
    return true;
  }

  ArrivalEvent event(VertexId v) const {
    check(v);
    return ArrivalEvent{v, back_[v]};
  }

  std::vector<ArrivalEvent> events() const {
    std::vector<ArrivalEvent> out;
    out.reserve(size());
    for (VertexId v = 0; v < size(); ++v) out.push_back(event(v));
    return out;
  }

  static OrderedGraph from_events(std::span<const ArrivalEvent> events) {
    OrderedGraph g;
    for (const auto& e : events) g.add_vertex(e);
    return g;
  }

  // Subgraph induced by the first `n` arrivals.
  OrderedGraph prefix(std::size_t n) const {
    OrderedGraph g;
    for (VertexId v = 0; v < std::min(n, size()); ++v) g.add_vertex(event(v));
    return g;
  }

  friend bool operator==(const OrderedGraph& a, const OrderedGraph& b) {
    return a.back_ == b.back_;
  }

 private:
  void check(VertexId v) const {
    if (v >= size()) {
      throw InvalidArgument("unknown vertex " + std::to_string(v));
    }
  }

  void reserve(std::size_t n) {
    if (n <= capacity_) {
      if (adjacency_.size() < n) adjacency_.resize(n, VertexSet(capacity_));
      return;
    }
    std::size_t cap = std::max<std::size_t>(64, capacity_);
    while (cap < n) cap *= 2;
    for (auto& row : adjacency_) row.resize(cap);
    capacity_ = cap;
    adjacency_.resize(n, VertexSet(capacity_));
  }

  std::vector<std::vector<VertexId>> back_;
  std::vector<VertexSet> adjacency_;
  std::size_t capacity_ = 0;
  std::size_t edges_ = 0;
};

inline OrderedGraph add_vertex(OrderedGraph graph, const ArrivalEvent& event) {
  graph.add_vertex(event);
  return graph;
}

}  // namespace cliquestream
