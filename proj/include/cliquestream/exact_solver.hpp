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
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cliquestream/clustering.hpp"
#include "cliquestream/errors.hpp"
#include "cliquestream/graph.hpp"

namespace cliquestream {

struct SolveBudget {
  std::size_t max_component_size = 20;
  std::uint64_t node_limit = 10'000'000;
};

struct OptimalResult {
  Clustering clustering;
  std::int64_t value = 0;
  bool proven_optimal = true;
  std::uint64_t nodes = 0;  // search nodes spent
};

namespace detail {

// Clique partitioning of one small graph (at most 64 vertices) given by
// adjacency masks. Vertices are assigned in index order; each either joins
// an existing compatible cluster (in label order) or opens a new one. The
// search therefore meets complete assignments in lexicographic order of
// their restricted-growth label vectors, and since only strictly better
// solutions replace the incumbent, the optimum returned is the
// lexicographically smallest one.
class PartitionSearch {
 public:
  PartitionSearch(std::vector<std::uint64_t> adjacency, std::uint64_t node_limit)
      : adj_(std::move(adjacency)),
        k_(adj_.size()),
        limit_(node_limit),
        labels_(k_, 0),
        best_labels_(k_, 0) {}

  void run() {
    clusters_.clear();
    dfs(0, 0);
  }

  std::int64_t best() const { return best_; }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& labels() const { return best_labels_; }

 private:
  // Every intra-cluster edge is charged to its later endpoint. Vertex u
  // (not yet placed, u >= next) can be charged at most the size of one
  // compatible existing cluster plus its unplaced earlier neighbors.
  std::int64_t upper_bound(std::size_t next) const {
    std::int64_t total = 0;
    for (std::size_t u = next; u < k_; ++u) {
      std::int64_t best_cluster = 0;
      for (std::uint64_t c : clusters_) {
        if ((c & ~adj_[u]) == 0) {
          best_cluster = std::max<std::int64_t>(best_cluster, std::popcount(c));
        }
      }
      const std::uint64_t unplaced_before =
          mask_below(u) & ~mask_below(next);
      total += best_cluster + std::popcount(adj_[u] & unplaced_before);
    }
    return total;
  }

  static std::uint64_t mask_below(std::size_t i) {
    return i >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << i) - 1;
  }

  void dfs(std::size_t i, std::int64_t profit) {
    if (exhausted_) return;
    if (nodes_++ >= limit_) {
      exhausted_ = true;
      return;
    }
    if (i == k_) {
      if (profit > best_) {
        best_ = profit;
        best_labels_ = labels_;
      }
      return;
    }
    if (profit + upper_bound(i) <= best_) return;
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::size_t c = 0; c < clusters_.size(); ++c) {
      if ((clusters_[c] & ~adj_[i]) != 0) continue;
      const int gain = std::popcount(clusters_[c]);
      clusters_[c] |= bit;
      labels_[i] = static_cast<int>(c);
      dfs(i + 1, profit + gain);
      clusters_[c] &= ~bit;
      if (exhausted_) return;
    }
    clusters_.push_back(bit);
    labels_[i] = static_cast<int>(clusters_.size() - 1);
    dfs(i + 1, profit);
    clusters_.pop_back();
  }

  std::vector<std::uint64_t> adj_;
  std::size_t k_;
  std::uint64_t limit_;
  std::vector<std::uint64_t> clusters_;
  std::vector<int> labels_;
  std::vector<int> best_labels_;
  std::int64_t best_ = -1;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

// Connected components of the subgraph induced by `subset`, each sorted
// ascending; components ordered by smallest vertex.
inline std::vector<std::vector<VertexId>> components(
    const OrderedGraph& graph, std::span<const VertexId> subset) {
  VertexSet remaining = graph.make_set();
  for (VertexId v : subset) remaining.set(v);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  for (VertexId root : sorted) {
    if (!remaining.test(root)) continue;
    remaining.reset(root);
    std::vector<VertexId> comp{root};
    for (std::size_t head = 0; head < comp.size(); ++head) {
      VertexSet next = graph.neighbors(comp[head]) & remaining;
      for (auto u = next.find_first(); u != VertexSet::npos; u = next.find_next(u)) {
        remaining.reset(u);
        comp.push_back(static_cast<VertexId>(u));
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline Clustering clustering_from_groups(Partition groups) {
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end());
  return Clustering::from_partition(groups);
}

}  // namespace detail

// Maximum-profit clique partition of the subgraph induced by `subset`.
// The graph is split into connected components, each solved by
// branch-and-bound; the returned clustering covers exactly `subset`.
inline OptimalResult max_clique_partition_induced(
    const OrderedGraph& graph, std::span<const VertexId> subset,
    const SolveBudget& budget = {}) {
  if (budget.max_component_size == 0 || budget.node_limit == 0) {
    throw InvalidArgument("solve budget must be positive");
  }
  if (budget.max_component_size > 64) {
    throw InvalidArgument("max_component_size is capped at 64");
  }
  OptimalResult result;
  Partition groups;
  std::uint64_t nodes_left = budget.node_limit;
  for (const auto& comp : detail::components(graph, subset)) {
    if (comp.size() > budget.max_component_size) {
      throw BudgetExceeded("connected component of " +
                           std::to_string(comp.size()) +
                           " vertices exceeds max_component_size " +
                           std::to_string(budget.max_component_size));
    }
    if (comp.size() == 1) {
      groups.push_back(comp);
      continue;
    }
    std::vector<std::uint64_t> adj(comp.size(), 0);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = 0; j < comp.size(); ++j) {
        if (i != j && graph.adjacent(comp[i], comp[j])) {
          adj[i] |= std::uint64_t{1} << j;
        }
      }
    }
    detail::PartitionSearch search(std::move(adj), std::max<std::uint64_t>(nodes_left, 1));
    search.run();
    result.nodes += search.nodes();
    nodes_left = nodes_left > search.nodes() ? nodes_left - search.nodes() : 0;
    if (search.exhausted()) result.proven_optimal = false;
    if (search.best() < 0) {
      // The limit hit before any complete assignment; fall back to singletons.
      for (VertexId v : comp) groups.push_back({v});
      continue;
    }
    const auto& labels = search.labels();
    const int count = *std::max_element(labels.begin(), labels.end()) + 1;
    Partition local(count);
    for (std::size_t i = 0; i < comp.size(); ++i) local[labels[i]].push_back(comp[i]);
    result.value += search.best();
    for (auto& g : local) groups.push_back(std::move(g));
  }
  result.clustering = detail::clustering_from_groups(std::move(groups));
  return result;
}

// profit_OPT(graph) together with a witnessing clustering.
inline OptimalResult max_clique_partition(const OrderedGraph& graph,
                                          const SolveBudget& budget = {}) {
  std::vector<VertexId> all(graph.size());
  std::iota(all.begin(), all.end(), VertexId{0});
  return max_clique_partition_induced(graph, all, budget);
}

// cost_OPT(graph). Minimizing cost and maximizing profit coincide offline,
// so this reports |E| minus the maximum profit.
inline OptimalResult min_cost_partition(const OrderedGraph& graph,
                                        const SolveBudget& budget = {}) {
  OptimalResult r = max_clique_partition(graph, budget);
  r.value = static_cast<std::int64_t>(graph.edge_count()) - r.value;
  return r;
}

// Testing oracle: enumerates every set partition of the vertex set (as
// restricted-growth strings, in lexicographic order), keeps those whose
// blocks are cliques, and returns the first one of maximum profit.
inline OptimalResult brute_force_partition(const OrderedGraph& graph) {
  constexpr std::size_t kMaxVertices = 10;
  const std::size_t n = graph.size();
  if (n > kMaxVertices) {
    throw InvalidArgument("brute_force_partition supports at most " +
                          std::to_string(kMaxVertices) + " vertices, got " +
                          std::to_string(n));
  }
  std::vector<int> rgs(n, 0);
  std::vector<int> best_rgs;
  std::int64_t best = -1;

  auto evaluate = [&](int /*blocks*/) {
    std::int64_t value = 0;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (rgs[u] != rgs[v]) continue;
        if (!graph.adjacent(static_cast<VertexId>(u), static_cast<VertexId>(v))) return;
        ++value;
      }
    }
    if (value > best) {
      best = value;
      best_rgs = rgs;
    }
  };

  // rgs[0] = 0; rgs[i] <= 1 + max(rgs[0..i-1]).
  auto recurse = [&](auto&& self, std::size_t i, int blocks) -> void {
    if (i == n) {
      evaluate(blocks);
      return;
    }
    for (int label = 0; label <= blocks; ++label) {
      rgs[i] = label;
      self(self, i + 1, std::max(blocks, label + 1));
    }
  };
  recurse(recurse, 0, 0);

  OptimalResult result;
  result.value = std::max<std::int64_t>(best, 0);
  Partition groups;
  if (n > 0) {
    groups.resize(*std::max_element(best_rgs.begin(), best_rgs.end()) + 1);
    for (std::size_t v = 0; v < n; ++v) groups[best_rgs[v]].push_back(static_cast<VertexId>(v));
  }
  result.clustering = detail::clustering_from_groups(std::move(groups));
  return result;
}

}  // namespace cliquestream
