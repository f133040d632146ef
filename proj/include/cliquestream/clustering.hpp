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
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "cliquestream/errors.hpp"
#include "cliquestream/graph.hpp"

namespace cliquestream {

// Clusters are numbered in creation order. A merge keeps the older id.
using ClusterId = std::uint32_t;

// A list of vertex groups; the plain-data form of a clustering.
using Partition = std::vector<std::vector<VertexId>>;

// Edge count inside a clique of the given size.
constexpr std::int64_t pairs(std::int64_t size) { return size * (size - 1) / 2; }

struct ClusterOp {
  enum class Kind { kSingleton, kMerge };

  Kind kind = Kind::kSingleton;
  VertexId vertex = 0;    // kSingleton
  ClusterId first = 0;    // kMerge
  ClusterId second = 0;   // kMerge

  static ClusterOp singleton(VertexId v) {
    return ClusterOp{Kind::kSingleton, v, 0, 0};
  }
  static ClusterOp merge(ClusterId a, ClusterId b) {
    return ClusterOp{Kind::kMerge, 0, a, b};
  }

  friend bool operator==(const ClusterOp&, const ClusterOp&) = default;
};

// A partition of (some of) the revealed vertices into clusters that only
// ever coarsens: clusters are created by `singleton` and combined by `merge`.
//
// `merge` checks the clique precondition. `from_partition` does not, so bulk
// construction of reference clusterings can be followed by a single
// `validate` pass.
class Clustering {
 public:
  static constexpr ClusterId kNone = std::numeric_limits<ClusterId>::max();

  Clustering() = default;

  ClusterId singleton(VertexId v) {
    if (contains(v)) {
      throw IllegalOperation("vertex " + std::to_string(v) +
                             " is already clustered");
    }
    if (cluster_of_.size() <= v) cluster_of_.resize(v + 1, kNone);
    const auto id = static_cast<ClusterId>(clusters_.size());
    clusters_.push_back(Cluster{{v}, true});
    cluster_of_[v] = id;
    ++alive_;
    ++vertices_;
    return id;
  }

  // Replaces clusters `a` and `b` by their union, which must be a clique of
  // `graph`. Returns the id of the union, min(a, b).
  ClusterId merge(const OrderedGraph& graph, ClusterId a, ClusterId b) {
    check_alive(a);
    check_alive(b);
    if (a == b) throw IllegalOperation("cannot merge a cluster with itself");
    for (VertexId u : clusters_[a].members) {
      for (VertexId w : clusters_[b].members) {
        if (!graph.adjacent(u, w)) {
          throw IllegalOperation("merge of clusters " + std::to_string(a) +
                                 " and " + std::to_string(b) +
                                 " is not a clique (" + std::to_string(u) +
                                 " and " + std::to_string(w) +
                                 " are not adjacent)");
        }
      }
    }
    return merge_unchecked(a, b);
  }

  ClusterId apply(const OrderedGraph& graph, const ClusterOp& op) {
    if (op.kind == ClusterOp::Kind::kSingleton) return singleton(op.vertex);
    return merge(graph, op.first, op.second);
  }

  bool contains(VertexId v) const {
    return v < cluster_of_.size() && cluster_of_[v] != kNone;
  }

  ClusterId cluster_of(VertexId v) const {
    if (!contains(v)) {
      throw InvalidArgument("vertex " + std::to_string(v) + " is not clustered");
    }
    return cluster_of_[v];
  }

  bool co_clustered(VertexId u, VertexId v) const {
    return contains(u) && contains(v) && cluster_of_[u] == cluster_of_[v];
  }

  bool alive(ClusterId c) const {
    return c < clusters_.size() && clusters_[c].alive;
  }

  // Sorted ascending.
  std::span<const VertexId> members(ClusterId c) const {
    check_alive(c);
    return clusters_[c].members;
  }

  std::size_t cluster_size(ClusterId c) const { return members(c).size(); }

  // Live cluster ids in creation order.
  std::vector<ClusterId> cluster_ids() const {
    std::vector<ClusterId> ids;
    ids.reserve(alive_);
    for (ClusterId c = 0; c < clusters_.size(); ++c) {
      if (clusters_[c].alive) ids.push_back(c);
    }
    return ids;
  }

  // Id the next `singleton` call will return.
  ClusterId next_id() const { return static_cast<ClusterId>(clusters_.size()); }

  std::size_t cluster_count() const { return alive_; }
  std::size_t vertex_count() const { return vertices_; }

  // Sum over clusters of C(|C|, 2).
  std::int64_t profit() const { return profit_; }

  // Edges of `graph` that are not inside a cluster.
  std::int64_t cost(const OrderedGraph& graph) const {
    return static_cast<std::int64_t>(graph.edge_count()) - profit_;
  }

  // Clusters in canonical order: members ascending, clusters by smallest
  // member.
  Partition partition() const {
    Partition out;
    out.reserve(alive_);
    for (const auto& c : clusters_) {
      if (c.alive) out.push_back(c.members);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Builds a clustering from disjoint groups without checking the clique
  // property. Cluster ids follow the order of `groups`.
  static Clustering from_partition(std::span<const std::vector<VertexId>> groups) {
    Clustering c;
    for (const auto& group : groups) {
      if (group.empty()) throw InvalidArgument("empty cluster in partition");
      ClusterId id = c.singleton(group.front());
      for (std::size_t i = 1; i < group.size(); ++i) {
        id = c.merge_unchecked(id, c.singleton(group[i]));
      }
    }
    return c;
  }

 private:
  struct Cluster {
    std::vector<VertexId> members;
    bool alive = true;
  };

  void check_alive(ClusterId c) const {
    if (!alive(c)) {
      throw IllegalOperation("unknown cluster id " + std::to_string(c));
    }
  }

  ClusterId merge_unchecked(ClusterId a, ClusterId b) {
    if (a > b) std::swap(a, b);
    auto& keep = clusters_[a].members;
    auto& gone = clusters_[b].members;
    profit_ += static_cast<std::int64_t>(keep.size()) *
               static_cast<std::int64_t>(gone.size());
    for (VertexId v : gone) cluster_of_[v] = a;
    std::vector<VertexId> merged;
    merged.reserve(keep.size() + gone.size());
    std::merge(keep.begin(), keep.end(), gone.begin(), gone.end(),
               std::back_inserter(merged));
    keep = std::move(merged);
    gone.clear();
    gone.shrink_to_fit();
    clusters_[b].alive = false;
    --alive_;
    return a;
  }

  std::vector<Cluster> clusters_;
  std::vector<ClusterId> cluster_of_;
  std::size_t alive_ = 0;
  std::size_t vertices_ = 0;
  std::int64_t profit_ = 0;
};

// Profit of a plain partition, without reference to a graph.
inline std::int64_t partition_profit(const Partition& groups) {
  std::int64_t total = 0;
  for (const auto& g : groups) total += pairs(static_cast<std::int64_t>(g.size()));
  return total;
}

// Returns an empty string when `clustering` is a clique partition of
// `graph`; otherwise a description of the first problem found. With
// `require_cover`, every vertex of the graph must be clustered.
inline std::string validation_error(const OrderedGraph& graph,
                                    const Clustering& clustering,
                                    bool require_cover = true) {
  std::size_t covered = 0;
  for (ClusterId c : clustering.cluster_ids()) {
    auto members = clustering.members(c);
    for (VertexId v : members) {
      if (v >= graph.size()) {
        return "cluster " + std::to_string(c) + " holds unknown vertex " +
               std::to_string(v);
      }
    }
    if (!graph.is_clique(members)) {
      return "cluster " + std::to_string(c) + " is not a clique";
    }
    covered += members.size();
  }
  if (require_cover && covered != graph.size()) {
    return "clustering covers " + std::to_string(covered) + " of " +
           std::to_string(graph.size()) + " vertices";
  }
  return {};
}

inline void validate(const OrderedGraph& graph, const Clustering& clustering,
                     bool require_cover = true) {
  if (auto err = validation_error(graph, clustering, require_cover); !err.empty()) {
    throw InvariantViolation("invalid clustering: " + err);
  }
}

// True when the co-cluster relation of `before` is contained in that of
// `after` (the online model never separates vertices).
inline bool refines(const Clustering& before, const Clustering& after) {
  for (ClusterId c : before.cluster_ids()) {
    auto members = before.members(c);
    for (VertexId v : members) {
      if (!after.co_clustered(members.front(), v)) return false;
    }
  }
  return true;
}

}  // namespace cliquestream
