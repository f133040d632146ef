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

// Static lower-bound instances for the online strategies.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquestream/clustering.hpp"
#include "cliquestream/errors.hpp"
#include "cliquestream/graph.hpp"
#include "cliquestream/online.hpp"
#include "cliquestream/parameters.hpp"
#include "cliquestream/ratio.hpp"

namespace cliquestream {

struct StaticInstance {
  std::string name;
  Objective objective = Objective::kMaxProfit;
  std::vector<ArrivalEvent> events;
  // Optimal (or adversary-witnessed) value after every step, in objective
  // units.
  std::optional<std::vector<std::int64_t>> analytic_opt;
  // Clustering of the full instance that attains the final analytic value.
  std::optional<Partition> reference_clustering;
};

namespace detail {

// Adds one vertex adjacent to `back` and returns its id.
inline VertexId append(std::vector<ArrivalEvent>& events, std::vector<VertexId> back) {
  const auto id = static_cast<VertexId>(events.size());
  events.push_back(ArrivalEvent{id, std::move(back)});
  return id;
}

}  // namespace detail

// Odd-numbered vertices (1-based) form a clique, even-numbered vertices form
// a clique, and vertex 2i is matched to 2i-1 for i <= floor((n-1)/2).
// Greedy pairs every vertex with its match; the optimum takes the two
// parity cliques.
inline StaticInstance greedy_nemesis(std::size_t n) {
  if (n < 4) throw InvalidArgument("greedy_nemesis needs n >= 4");
  StaticInstance inst;
  inst.name = "greedy-nemesis(n=" + std::to_string(n) + ")";
  const std::size_t matched = (n - 1) / 2;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<VertexId> back;
    for (std::size_t u = i % 2; u < i; u += 2) back.push_back(static_cast<VertexId>(u));
    // 0-based odd index i = 2m - 1 pairs with i - 1 when m <= matched.
    if (i % 2 == 1 && (i + 1) / 2 <= matched) back.push_back(static_cast<VertexId>(i - 1));
    detail::append(inst.events, std::move(back));
  }
  // Prefix of t vertices: the parity cliques have ceil(t/2) and floor(t/2)
  // vertices and any mixed cluster is a single matching edge, so the optimum
  // is C(a,2) + C(b,2) once t >= 3, and the lone matching edge when t = 2.
  std::vector<std::int64_t> opt;
  for (std::size_t t = 1; t <= n; ++t) {
    const auto a = static_cast<std::int64_t>((t + 1) / 2);
    const auto b = static_cast<std::int64_t>(t / 2);
    opt.push_back(t == 2 ? 1 : pairs(a) + pairs(b));
  }
  inst.analytic_opt = std::move(opt);
  Partition ref(2);
  for (std::size_t i = 0; i < n; ++i) ref[i % 2].push_back(static_cast<VertexId>(i));
  inst.reference_clustering = std::move(ref);
  return inst;
}

enum class OccVariant { kPlain, kTriangle };

inline std::string_view to_string(OccVariant v) {
  return v == OccVariant::kPlain ? "plain" : "triangle";
}

inline OccVariant parse_occ_variant(std::string_view s) {
  if (s == "plain") return OccVariant::kPlain;
  if (s == "triangle") return OccVariant::kTriangle;
  throw InvalidArgument("unknown variant '" + std::string(s) + "' (expected plain|triangle)");
}

struct OccNemesis {
  StaticInstance instance;
  std::vector<std::int64_t> batch_edges;   // m_i = ceil(gamma^i), i = 0..phases
  std::vector<std::size_t> batch_end;      // 1-based step of each batch's last vertex
  std::size_t triangles = 0;               // triangles in the final batch
};

// Batches B_0..B_phases arrive in order. B_i carries m_i = ceil(gamma^i)
// disjoint batch edges, each edge's endpoints consecutive, and every pair of
// vertices from different batches is adjacent. In the triangle variant the
// last batch instead holds floor(m/3) triangles followed by m mod 3 edges,
// keeping m internal edges.
//
// The analytic optimum is the profit of the adversary clustering restricted
// to each prefix: clique C_p collects the p-th unit (edge or triangle) of
// every batch.
inline OccNemesis occ_nemesis(double gamma, std::size_t phases, OccVariant variant) {
  if (!(gamma > 1.0)) throw InvalidArgument("occ_nemesis needs gamma > 1");
  if (phases < 1) throw InvalidArgument("occ_nemesis needs phases >= 1");
  OccNemesis out;
  auto& inst = out.instance;
  inst.name = "occ-nemesis(gamma=" + std::to_string(gamma) + ", phases=" +
              std::to_string(phases) + ", variant=" + std::string(to_string(variant)) + ")";

  std::vector<VertexId> earlier;  // all vertices of completed batches
  std::vector<std::vector<VertexId>> cliques;
  std::vector<std::int64_t> opt;
  std::int64_t profit = 0;

  for (std::size_t i = 0; i <= phases; ++i) {
    const std::int64_t m = phase_threshold(gamma, i);
    out.batch_edges.push_back(m);
    std::vector<std::size_t> unit_sizes;
    if (variant == OccVariant::kTriangle && i == phases) {
      out.triangles = static_cast<std::size_t>(m / 3);
      unit_sizes.assign(out.triangles, 3);
      unit_sizes.insert(unit_sizes.end(), static_cast<std::size_t>(m % 3), 2);
    } else {
      unit_sizes.assign(static_cast<std::size_t>(m), 2);
    }
    std::vector<VertexId> batch;
    for (std::size_t p = 0; p < unit_sizes.size(); ++p) {
      if (cliques.size() <= p) cliques.emplace_back();
      std::vector<VertexId> unit;
      for (std::size_t k = 0; k < unit_sizes[p]; ++k) {
        std::vector<VertexId> back = earlier;
        back.insert(back.end(), unit.begin(), unit.end());
        const VertexId v = detail::append(inst.events, std::move(back));
        profit += static_cast<std::int64_t>(cliques[p].size());
        cliques[p].push_back(v);
        unit.push_back(v);
        opt.push_back(profit);
      }
      batch.insert(batch.end(), unit.begin(), unit.end());
    }
    earlier.insert(earlier.end(), batch.begin(), batch.end());
    out.batch_end.push_back(inst.events.size());
  }
  inst.analytic_opt = std::move(opt);
  inst.reference_clustering = std::move(cliques);
  return out;
}

struct MinccGame {
  StaticInstance instance;            // the events actually released
  RatioTrace trace;                   // cost trace, analytic optimum
  bool stopped_early = false;         // the strategy clustered no pair
  std::optional<std::size_t> pair;    // chosen pair index i (vertices 2i, 2i+1)
};

// Adaptive cost nemesis. Releases beta+1 disjoint edges; if the strategy has
// clustered none of them the game stops (optimal cost is 0). Otherwise it
// picks the lowest clustered pair {a, b} and releases n - 2*beta - 2 further
// vertices that form a clique with b. The optimum then pays only for (a, b)
// while the strategy pays for every edge from b to the new vertices.
inline MinccGame play_mincc_nemesis(OnlineStrategy& strategy, std::int64_t beta,
                                    std::size_t n) {
  if (beta < 0) throw InvalidArgument("mincc_nemesis needs beta >= 0");
  const auto pairs_count = static_cast<std::size_t>(beta + 1);
  if (n <= 3 * static_cast<std::size_t>(beta) + 2) {
    throw InvalidArgument("mincc_nemesis needs n > 3*beta + 2");
  }
  MinccGame game;
  auto& inst = game.instance;
  inst.name = "mincc-nemesis(beta=" + std::to_string(beta) + ", n=" + std::to_string(n) + ")";
  inst.objective = Objective::kMinCost;
  game.trace.objective = Objective::kMinCost;
  std::vector<std::int64_t> opt;

  OnlineRun run(strategy);
  auto release = [&](std::vector<VertexId> back, std::int64_t opt_cost) {
    const VertexId v = detail::append(inst.events, std::move(back));
    run.step(inst.events[v]);
    opt.push_back(opt_cost);
    game.trace.record(run.value(Objective::kMinCost), opt_cost);
  };

  for (std::size_t i = 0; i < pairs_count; ++i) {
    release({}, 0);
    release({static_cast<VertexId>(2 * i)}, 0);
  }
  for (std::size_t i = 0; i < pairs_count; ++i) {
    if (run.clustering().co_clustered(static_cast<VertexId>(2 * i),
                                      static_cast<VertexId>(2 * i + 1))) {
      game.pair = i;
      break;
    }
  }
  Partition ref;
  if (!game.pair) {
    game.stopped_early = true;
    for (std::size_t i = 0; i < pairs_count; ++i) {
      ref.push_back({static_cast<VertexId>(2 * i), static_cast<VertexId>(2 * i + 1)});
    }
  } else {
    const auto hub = static_cast<VertexId>(2 * *game.pair + 1);
    std::vector<VertexId> clique{hub};
    for (std::size_t k = 2 * pairs_count; k < n; ++k) {
      // From the first new vertex on, the best clustering pays exactly one
      // edge: either (a, b) or the single edge from b to the new vertex.
      release(clique, 1);
      clique.push_back(static_cast<VertexId>(k));
    }
    for (std::size_t i = 0; i < pairs_count; ++i) {
      if (i == *game.pair) continue;
      ref.push_back({static_cast<VertexId>(2 * i), static_cast<VertexId>(2 * i + 1)});
    }
    ref.push_back({static_cast<VertexId>(2 * *game.pair)});
    ref.push_back(std::move(clique));
  }
  inst.analytic_opt = std::move(opt);
  inst.reference_clustering = std::move(ref);
  return game;
}

}  // namespace cliquestream
