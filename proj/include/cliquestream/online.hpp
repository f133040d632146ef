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

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cliquestream/clustering.hpp"
#include "cliquestream/errors.hpp"
#include "cliquestream/exact_solver.hpp"
#include "cliquestream/graph.hpp"
#include "cliquestream/ratio.hpp"

namespace cliquestream {

// An online clique-clustering strategy.
//
// `observe` is called once per arrival, after `graph` has been extended by
// the new vertex and before it is clustered. It returns the operations to
// apply, in order: first `singleton(event.vertex)`, then any number of
// merges. Operations refer to clusters by id; the singleton receives
// `clustering.next_id()` and a merge result keeps the smaller id.
class OnlineStrategy {
 public:
  virtual ~OnlineStrategy() = default;

  virtual std::string name() const = 0;

  virtual std::vector<ClusterOp> observe(const ArrivalEvent& event,
                                         const OrderedGraph& graph,
                                         const Clustering& clustering) = 0;
};

// Owns the revealed graph and the authoritative clustering for one run and
// enforces the online rules on every operation a strategy emits.
class OnlineRun {
 public:
  explicit OnlineRun(OnlineStrategy& strategy) : strategy_(&strategy) {}

  const std::vector<ClusterOp>& step(const ArrivalEvent& event) {
    graph_.add_vertex(event);
    last_ops_ = strategy_->observe(event, graph_, clustering_);
    if (last_ops_.empty() || last_ops_.front().kind != ClusterOp::Kind::kSingleton ||
        last_ops_.front().vertex != event.vertex) {
      throw IllegalOperation(strategy_->name() +
                             ": first operation must be singleton of the new vertex");
    }
    clustering_.singleton(event.vertex);
    for (std::size_t i = 1; i < last_ops_.size(); ++i) {
      if (last_ops_[i].kind != ClusterOp::Kind::kMerge) {
        throw IllegalOperation(strategy_->name() + ": only one singleton per arrival");
      }
      clustering_.apply(graph_, last_ops_[i]);
    }
    return last_ops_;
  }

  const OrderedGraph& graph() const { return graph_; }
  const Clustering& clustering() const { return clustering_; }
  const OnlineStrategy& strategy() const { return *strategy_; }

  std::int64_t value(Objective objective) const {
    return objective == Objective::kMaxProfit ? clustering_.profit()
                                              : clustering_.cost(graph_);
  }

 private:
  OnlineStrategy* strategy_;
  OrderedGraph graph_;
  Clustering clustering_;
  std::vector<ClusterOp> last_ops_;
};

// Where the per-step optimum comes from: the exact solver on every prefix,
// or caller-supplied values (one per step, in objective units) for
// constructed instances too large to solve.
struct OptSource {
  enum class Kind { kExact, kAnalytic };

  Kind kind = Kind::kExact;
  SolveBudget budget;
  std::vector<std::int64_t> analytic;

  static OptSource exact(SolveBudget budget = {}) {
    return OptSource{Kind::kExact, budget, {}};
  }
  static OptSource analytic_values(std::vector<std::int64_t> values) {
    return OptSource{Kind::kAnalytic, {}, std::move(values)};
  }
};

inline std::int64_t optimal_value(const OrderedGraph& graph, Objective objective,
                                  const SolveBudget& budget) {
  const OptimalResult r = max_clique_partition(graph, budget);
  if (!r.proven_optimal) {
    throw BudgetExceeded("node limit reached before optimality was proven");
  }
  return objective == Objective::kMaxProfit
             ? r.value
             : static_cast<std::int64_t>(graph.edge_count()) - r.value;
}

// Plays `events` against `strategy`, recording strategy and optimal value
// after every arrival.
inline RatioTrace run_online(OnlineStrategy& strategy,
                             std::span<const ArrivalEvent> events,
                             Objective objective, const OptSource& opt) {
  if (opt.kind == OptSource::Kind::kAnalytic && opt.analytic.size() != events.size()) {
    throw InvalidArgument("analytic optimum has " + std::to_string(opt.analytic.size()) +
                          " values for " + std::to_string(events.size()) + " steps");
  }
  RatioTrace trace;
  trace.objective = objective;
  OnlineRun run(strategy);
  for (std::size_t t = 0; t < events.size(); ++t) {
    run.step(events[t]);
    const std::int64_t best = opt.kind == OptSource::Kind::kExact
                                  ? optimal_value(run.graph(), objective, opt.budget)
                                  : opt.analytic[t];
    trace.record(run.value(objective), best);
  }
  return trace;
}

}  // namespace cliquestream
