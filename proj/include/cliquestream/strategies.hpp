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
#include <map>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cliquestream/clustering.hpp"
#include "cliquestream/errors.hpp"
#include "cliquestream/exact_solver.hpp"
#include "cliquestream/graph.hpp"
#include "cliquestream/online.hpp"
#include "cliquestream/parameters.hpp"

namespace cliquestream {

// Among equally large candidate clusters, the oldest one wins.
inline ClusterId greedy_tiebreak(std::span<const ClusterId> candidates) {
  if (candidates.empty()) throw InvalidArgument("greedy_tiebreak: no candidates");
  return *std::min_element(candidates.begin(), candidates.end());
}

// Puts each arriving vertex into the largest cluster it can join while
// keeping the clique property; otherwise it stays a singleton.
//
// With `nonprocrastinate`, the step then keeps merging mergeable cluster
// pairs (largest combined size first) until none is left. Only pairs that
// involve the cluster touched in this step are examined: every other pair
// was already non-mergeable after the previous step, and nothing else
// changed.
class GreedyStrategy : public OnlineStrategy {
 public:
  explicit GreedyStrategy(bool nonprocrastinate = false)
      : nonprocrastinate_(nonprocrastinate) {}

  std::string name() const override {
    return nonprocrastinate_ ? "greedy-np" : "greedy";
  }

  bool nonprocrastinate() const { return nonprocrastinate_; }

  std::vector<ClusterOp> observe(const ArrivalEvent& event, const OrderedGraph& graph,
                                 const Clustering& clustering) override {
    const VertexId v = event.vertex;
    std::vector<ClusterOp> ops{ClusterOp::singleton(v)};
    const ClusterId fresh = clustering.next_id();

    std::vector<ClusterId> touching;
    for (VertexId u : graph.back_neighbors(v)) touching.push_back(clustering.cluster_of(u));
    std::sort(touching.begin(), touching.end());
    touching.erase(std::unique(touching.begin(), touching.end()), touching.end());

    std::size_t best_size = 0;
    std::vector<ClusterId> best;
    for (ClusterId c : touching) {
      auto members = clustering.members(c);
      const bool compatible = std::all_of(members.begin(), members.end(),
                                          [&](VertexId u) { return graph.adjacent(u, v); });
      if (!compatible) continue;
      if (members.size() > best_size) {
        best_size = members.size();
        best.clear();
      }
      if (members.size() == best_size) best.push_back(c);
    }
    if (best.empty()) return ops;

    const ClusterId target = greedy_tiebreak(best);
    ops.push_back(ClusterOp::merge(fresh, target));
    if (!nonprocrastinate_) return ops;

    std::vector<VertexId> active(clustering.members(target).begin(),
                                 clustering.members(target).end());
    active.push_back(v);
    ClusterId active_id = target;
    std::vector<ClusterId> absorbed{target};
    for (;;) {
      // Clusters with at least one edge into the active cluster.
      std::vector<ClusterId> near;
      for (VertexId a : active) {
        const VertexSet& adj = graph.neighbors(a);
        for (auto u = adj.find_first(); u != VertexSet::npos; u = adj.find_next(u)) {
          const auto w = static_cast<VertexId>(u);
          if (w != v) near.push_back(clustering.cluster_of(w));
        }
      }
      std::sort(near.begin(), near.end());
      near.erase(std::unique(near.begin(), near.end()), near.end());
      ClusterId pick = Clustering::kNone;
      std::size_t pick_size = 0;
      for (ClusterId c : near) {
        if (std::find(absorbed.begin(), absorbed.end(), c) != absorbed.end()) continue;
        auto members = clustering.members(c);
        bool clique = true;
        for (VertexId a : active) {
          for (VertexId b : members) {
            if (!graph.adjacent(a, b)) {
              clique = false;
              break;
            }
          }
          if (!clique) break;
        }
        if (clique && members.size() > pick_size) {
          pick = c;
          pick_size = members.size();
        }
      }
      if (pick == Clustering::kNone) break;
      ops.push_back(ClusterOp::merge(active_id, pick));
      active_id = std::min(active_id, pick);
      absorbed.push_back(pick);
      auto members = clustering.members(pick);
      active.insert(active.end(), members.begin(), members.end());
    }
    return ops;
  }

 private:
  bool nonprocrastinate_;
};

// Observable state of the phase strategy.
struct PhaseState {
  std::size_t j = 0;            // current phase
  std::vector<VertexId> pool;   // vertices in singleton clusters, ascending
  double gamma = 0.0;
  std::int64_t threshold = 0;   // ceil(gamma^j)
};

// One completed phase.
struct PhaseRecord {
  std::size_t phase = 0;
  std::size_t trigger_step = 0;     // 1-based arrival count at commit
  std::int64_t delta = 0;           // profit committed by this phase
  std::int64_t cumulative = 0;      // strategy profit after the commit
  std::int64_t threshold = 0;
};

// Doubling strategy. Arrivals accumulate in a pool of singletons; as soon as
// an optimal clustering of the pool reaches profit ceil(gamma^j), all of its
// non-singleton clusters are committed, their vertices leave the pool, and
// phase j + 1 begins. Clusters committed in different phases are never
// merged.
//
// The pool optimum is maintained per connected component of the pool: an
// arrival only changes the component it joins, which is re-solved alone.
class OccStrategy : public OnlineStrategy {
 public:
  explicit OccStrategy(double gamma = kAsymptoticPreset.gamma, SolveBudget budget = {})
      : gamma_(gamma), budget_(budget) {
    if (!(gamma > 1.0)) throw InvalidArgument("gamma must exceed 1");
    threshold_ = phase_threshold(gamma_, 0);
  }

  std::string name() const override { return "occ"; }

  double gamma() const { return gamma_; }

  PhaseState state() const {
    std::vector<VertexId> pool;
    for (const auto& [v, parent] : parent_) pool.push_back(v);
    return PhaseState{phase_, std::move(pool), gamma_, threshold_};
  }

  const std::vector<PhaseRecord>& phases() const { return records_; }

  // Profit of an optimal clustering of the current pool.
  std::int64_t pool_value() const { return pool_value_; }

  std::vector<ClusterOp> observe(const ArrivalEvent& event, const OrderedGraph& graph,
                                 const Clustering& clustering) override {
    const VertexId v = event.vertex;
    std::vector<ClusterOp> ops{ClusterOp::singleton(v)};
    const ClusterId fresh = clustering.next_id();
    ++steps_;

    // Join v with the pool components it touches and re-solve that component.
    parent_[v] = v;
    std::vector<VertexId> members{v};
    std::int64_t old_value = 0;
    std::vector<VertexId> roots;
    for (VertexId u : graph.back_neighbors(v)) {
      if (parent_.count(u)) roots.push_back(find(u));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (VertexId r : roots) {
      old_value += value_[r];
      auto& m = members_[r];
      members.insert(members.end(), m.begin(), m.end());
      members_.erase(r);
      value_.erase(r);
      parent_[r] = v;
    }
    std::int64_t new_value = 0;
    if (members.size() > 1) {
      new_value = max_clique_partition_induced(graph, members, budget_).value;
    }
    members_[v] = std::move(members);
    value_[v] = new_value;
    pool_value_ += new_value - old_value;

    if (pool_value_ < threshold_) return ops;

    std::vector<VertexId> pool;
    for (const auto& [u, p] : parent_) pool.push_back(u);
    const OptimalResult best = max_clique_partition_induced(graph, pool, budget_);
    if (!best.proven_optimal) {
      throw BudgetExceeded("occ: node limit reached while clustering the pool");
    }
    if (best.value != pool_value_) {
      throw InvariantViolation("occ: cached pool optimum disagrees with a fresh solve");
    }
    auto id_of = [&](VertexId u) { return u == v ? fresh : clustering.cluster_of(u); };
    std::vector<VertexId> leftover;
    for (ClusterId c : best.clustering.cluster_ids()) {
      auto group = best.clustering.members(c);
      if (group.size() == 1) {
        leftover.push_back(group.front());
        continue;
      }
      ClusterId acc = id_of(group[0]);
      for (std::size_t i = 1; i < group.size(); ++i) {
        const ClusterId next = id_of(group[i]);
        ops.push_back(ClusterOp::merge(acc, next));
        acc = std::min(acc, next);
      }
    }
    committed_ += best.value;
    records_.push_back(PhaseRecord{phase_, steps_, best.value, committed_, threshold_});

    // Leftover pool vertices are pairwise non-adjacent (an edge between two
    // of them would improve the optimum), so each is its own component.
    parent_.clear();
    members_.clear();
    value_.clear();
    for (VertexId u : leftover) {
      parent_[u] = u;
      members_[u] = {u};
      value_[u] = 0;
    }
    pool_value_ = 0;
    ++phase_;
    threshold_ = phase_threshold(gamma_, phase_);
    return ops;
  }

 private:
  VertexId find(VertexId u) {
    VertexId root = u;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[u] != root) {
      VertexId next = parent_[u];
      parent_[u] = root;
      u = next;
    }
    return root;
  }

  double gamma_;
  SolveBudget budget_;
  std::size_t phase_ = 0;
  std::int64_t threshold_ = 1;
  std::int64_t committed_ = 0;
  std::size_t steps_ = 0;
  std::int64_t pool_value_ = 0;
  std::map<VertexId, VertexId> parent_;  // pool membership + union-find
  std::unordered_map<VertexId, std::vector<VertexId>> members_;  // by root
  std::unordered_map<VertexId, std::int64_t> value_;             // by root
  std::vector<PhaseRecord> records_;
};

// Builds a strategy from its CLI name: greedy | greedy-np | occ.
inline std::unique_ptr<OnlineStrategy> make_strategy(const std::string& name,
                                                     double gamma = kAsymptoticPreset.gamma,
                                                     SolveBudget budget = {}) {
  if (name == "greedy") return std::make_unique<GreedyStrategy>(false);
  if (name == "greedy-np") return std::make_unique<GreedyStrategy>(true);
  if (name == "occ") return std::make_unique<OccStrategy>(gamma, budget);
  throw InvalidArgument("unknown strategy '" + name + "' (expected greedy|greedy-np|occ)");
}

}  // namespace cliquestream
