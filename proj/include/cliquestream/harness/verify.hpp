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

// Verification suites. Each returns a list of named checks; the CLI's
// `verify` command and the acceptance runner share them.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cliquestream/analysis.hpp"
#include "cliquestream/clustering.hpp"
#include "cliquestream/errors.hpp"
#include "cliquestream/exact_solver.hpp"
#include "cliquestream/graph.hpp"
#include "cliquestream/harness/parallel.hpp"
#include "cliquestream/harness/random_graphs.hpp"
#include "cliquestream/harness/trace_io.hpp"
#include "cliquestream/nemesis.hpp"
#include "cliquestream/online.hpp"
#include "cliquestream/parameters.hpp"
#include "cliquestream/skeleton.hpp"
#include "cliquestream/strategies.hpp"

namespace cliquestream {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  Json to_json() const {
    Json j;
    j["suite"] = suite;
    j["passed"] = passed();
    j["seconds"] = seconds;
    Json cs = Json::array();
    for (const auto& c : checks) {
      cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    j["checks"] = std::move(cs);
    return j;
  }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  std::size_t nmax = 9;                     // solver-oracle graph size cap
  std::vector<std::size_t> depths{2, 3, 4}; // skeleton core depths
};

namespace detail {

inline std::string fmt(double v, int places = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

// Outcome of one random sample: empty when it passed.
using SampleError = std::optional<std::string>;

inline Check reduce(std::string name, const std::vector<SampleError>& results,
                    std::string what) {
  std::size_t failures = 0;
  std::string first;
  for (const auto& r : results) {
    if (r) {
      if (failures == 0) first = *r;
      ++failures;
    }
  }
  Check c{std::move(name), failures == 0, {}};
  c.detail = std::to_string(results.size()) + " " + what + ", " + std::to_string(failures) +
             " failures" + (failures ? "; first: " + first : "");
  return c;
}

struct FinalState {
  std::int64_t profit = 0;
  std::int64_t cost = 0;
  Partition partition;
};

inline FinalState play(OnlineStrategy& s, std::span<const ArrivalEvent> events) {
  OnlineRun run(s);
  for (const auto& e : events) run.step(e);
  return {run.clustering().profit(), run.clustering().cost(run.graph()),
          run.clustering().partition()};
}

// All graphs on n labelled vertices, as adjacency matrices indexed by mask
// bits over the pairs (u < v) in lexicographic order.
inline std::vector<std::vector<char>> adjacency_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      adj[u][v] = adj[v][u] = static_cast<char>((mask >> bit) & 1U);
    }
  }
  return adj;
}

inline std::vector<VertexId> identity_order(std::size_t n) {
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  return order;
}

}  // namespace detail

// Nonnegativity of F(a, b, x) and the identities used to establish it.
inline SuiteReport verify_profvalue() {
  SuiteReport r{"profvalue", {}, 0.0};
  double min_gap = 1e300;
  std::string where;
  for (std::int64_t a = 0; a <= 60; ++a) {
    for (std::int64_t b = 0; b <= 60; ++b) {
      for (int k = 1; k <= 1000; ++k) {
        const double x = k / 1000.0;
        const double f = profvalue_gap(a, b, x);
        if (f < min_gap) {
          min_gap = f;
          where = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " x=" + detail::fmt(x, 3);
        }
      }
    }
  }
  r.checks.push_back({"nonnegative on a,b in [0,60], 1000-point x grid", min_gap >= -1e-9,
                      "min F = " + detail::fmt(min_gap, 9) + " at " + where});

  bool ok = true;
  for (std::int64_t b = 0; b <= 60 && ok; ++b) {
    for (int k = 1; k <= 1000 && ok; k += 37) {
      ok = std::abs(profvalue_gap(0, b, k / 1000.0) - static_cast<double>(b * (b - 1))) < 1e-9;
    }
  }
  r.checks.push_back({"F(0,b,x) = b(b-1)", ok, ""});

  ok = true;
  for (int k = 1; k <= 1000 && ok; ++k) {
    const double x = k / 1000.0;
    ok = std::abs(profvalue_gap(1, 2, x) - (2.0 - 2.0 * x)) < 1e-9;
  }
  r.checks.push_back({"F(1,2,x) = 2 - 2x", ok, ""});

  ok = true;
  for (std::int64_t a = 0; a <= 60 && ok; ++a) {
    for (std::int64_t b = 0; b <= 60 && ok; ++b) {
      const auto d = static_cast<double>(b - a);
      ok = std::abs(profvalue_gap(a, b, 1.0) - (d * d - d)) < 1e-9;
    }
  }
  r.checks.push_back({"F(a,b,1) = (b-a)^2 - (b-a)", ok, ""});

  ok = true;
  std::string bad;
  for (std::int64_t a = 2; a <= 60 && ok; ++a) {
    for (std::int64_t b = 2; b <= a && ok; ++b) {
      const double x = static_cast<double>(b - 1) / static_cast<double>(a - 1);
      const double want = static_cast<double>((a - b) * (b - 1)) / static_cast<double>(a - 1);
      const double got = profvalue_gap(a, b, x);
      ok = std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want));
      if (!ok) bad = "a=" + std::to_string(a) + " b=" + std::to_string(b);
    }
  }
  r.checks.push_back({"F(a,b,(b-1)/(a-1)) = (a-b)(b-1)/(a-1) for 2 <= b <= a", ok, bad});
  return r;
}

inline constexpr std::int64_t kExpectedSBounds[9][2] = {
    {1, 1},       {5, 7},       {16, 23},     {53, 68},    {172, 202},
    {566, 623},   {1864, 1972}, {6152, 6352}, {20311, 20679}};
inline constexpr const char* kExpectedRPrime[9] = {"1.000",  "10.000", "13.185",
                                                   "18.636", "21.881", "22.641",
                                                   "21.516", "19.925", "18.509"};

// Phase bounds, ratio recurrence, tail bound, and closed-form ratios.
inline SuiteReport verify_table() {
  SuiteReport r{"table", {}, 0.0};
  const auto p = kAsymptoticPreset;
  const auto rows = recurrence_table(p.gamma, p.x, kTailHorizon);

  std::size_t matched = 0;
  std::string mismatch;
  for (std::size_t j = 0; j < 9; ++j) {
    const auto& row = rows[j];
    const double want = std::stod(kExpectedRPrime[j]);
    const bool ok = row.s_min == kExpectedSBounds[j][0] && row.s_max == kExpectedSBounds[j][1] &&
                    std::abs(row.r_prime - want) <= 1e-3 &&
                    format_bound(row.r_prime) == kExpectedRPrime[j];
    if (ok) {
      ++matched;
    } else if (mismatch.empty()) {
      mismatch = "j=" + std::to_string(j) + ": S=" + std::to_string(row.s_min) + "/" +
                 std::to_string(row.s_max) + " R'=" + format_bound(row.r_prime);
    }
  }
  r.checks.push_back({"rows j=0..8 match (S exact, R' within 0.001)", matched == 9,
                      std::to_string(matched) + " rows matched" +
                          (mismatch.empty() ? "" : "; " + mismatch)});

  const auto top = std::max_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.r_prime < b.r_prime;
  });
  r.checks.push_back({"maximum R' over j<=30 is 22.641 at j=5",
                      top->j == 5 && format_bound(top->r_prime) == "22.641",
                      "max " + format_bound(top->r_prime) + " at j=" + std::to_string(top->j)});

  double tail_max = 0.0;
  for (std::size_t j = 9; j <= kTailHorizon; ++j) tail_max = std::max(tail_max, rows[j].r_prime);
  r.checks.push_back({"R'_j <= 20 for 9 <= j <= 30", tail_max <= 20.0,
                      "max " + detail::fmt(tail_max)});

  const TailBound t = tail_bound(p.gamma, p.x, 8);
  r.checks.push_back({"tail coefficients alpha < 3/5, beta < 8 for j >= 8",
                      t.alpha_sup < 0.6 && t.beta_sup < 8.0,
                      "alpha=" + detail::fmt(t.alpha_sup) + " beta=" + detail::fmt(t.beta_sup)});
  const auto hat = iterate_bound(0.6, 8.0, rows[8].r_prime, kTailHorizon - 8);
  const double hat_max = *std::max_element(hat.begin(), hat.end());
  r.checks.push_back({"iterated tail bound stays <= 20 for 9 <= j <= 30",
                      hat_max <= 20.0 && t.limit <= 20.0,
                      "max " + detail::fmt(hat_max) + ", fixed point " + detail::fmt(t.limit)});

  const double ra = asymptotic_R(kAsymptoticPreset.gamma, kAsymptoticPreset.x);
  const double rb = asymptotic_R(kAbsolutePreset.gamma, kAbsolutePreset.x);
  const double closed = (47.0 + 13.0 * std::sqrt(13.0)) / 6.0;
  r.checks.push_back({"asymptotic R = 15.6455 at the asymptotic preset",
                      std::abs(ra - 15.6455) <= 1e-3 && std::abs(ra - closed) <= 1e-9,
                      detail::fmt(ra)});
  r.checks.push_back({"asymptotic R = 15.902 at the absolute preset",
                      std::abs(rb - 15.902) <= 1e-3, detail::fmt(rb)});

  double mid_min = 1e300;
  for (int k = 1; k < 100000; ++k) {
    const double g = std::sqrt(3.0) + (3.0 - std::sqrt(3.0)) * k / 100000.0;
    mid_min = std::min(mid_min, occ_lb_formula(g));
  }
  r.checks.push_back({"middle-case lower bound minimum = 10.927",
                      std::abs(mid_min - 10.927) <= 1e-3, detail::fmt(mid_min)});
  const double at3 = occ_lb_formula(3.0);
  const double below3 = occ_lb_formula(std::nextafter(3.0, 0.0));
  r.checks.push_back({"lower bound = 11 at gamma = 3 and continuous there",
                      std::abs(at3 - 11.0) <= 1e-12 && std::abs(below3 - at3) <= 1e-9,
                      detail::fmt(at3) + " / " + detail::fmt(below3)});
  return r;
}

// Branch and bound against full set-partition enumeration.
inline SuiteReport verify_solver_oracle(const VerifyOptions& opt) {
  if (opt.nmax < 1 || opt.nmax > 10) {
    throw InvalidArgument("solver-oracle: nmax must lie in [1, 10]");
  }
  SuiteReport r{"solver-oracle", {}, 0.0};
  auto compare = [](const std::vector<ArrivalEvent>& events) -> detail::SampleError {
    const OrderedGraph g = OrderedGraph::from_events(events);
    const OptimalResult bb = max_clique_partition(g);
    const OptimalResult bf = brute_force_partition(g);
    const std::string tag = "n=" + std::to_string(g.size()) + " m=" + std::to_string(g.edge_count());
    if (!bb.proven_optimal) return tag + ": not proven optimal";
    if (bb.value != bf.value) {
      return tag + ": bb=" + std::to_string(bb.value) + " brute=" + std::to_string(bf.value);
    }
    if (const auto err = validation_error(g, bb.clustering); !err.empty()) return tag + ": " + err;
    if (bb.clustering.profit() != bb.value) return tag + ": reported value differs from clustering";
    if (bb.clustering.partition() != bf.clustering.partition()) {
      return tag + ": tie broken differently from the first optimum in enumeration order";
    }
    return std::nullopt;
  };

  std::vector<std::pair<std::size_t, std::uint64_t>> all;
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < graphs; ++m) all.push_back({n, m});
  }
  r.checks.push_back(detail::reduce(
      "exhaustive n <= 6", parallel_map(all.size(), [&](std::size_t i) {
        const auto [n, m] = all[i];
        return compare(events_in_order(detail::adjacency_from_mask(n, m),
                                       detail::identity_order(n)));
      }),
      "graphs"));

  r.checks.push_back(detail::reduce(
      "random G(n,p), n <= " + std::to_string(opt.nmax),
      parallel_map(opt.samples, [&](std::size_t i) {
        Rng rng = sample_rng(opt.seed, i);
        const std::size_t n = 1 + uniform_below(rng, opt.nmax);
        return compare(erdos_renyi(rng, n, kEdgeProbabilities[i % 3]));
      }),
      "graphs"));
  return r;
}

// Greedy on small graphs and on its lower-bound instance.
inline SuiteReport verify_greedy_small(const VerifyOptions& opt) {
  SuiteReport r{"greedy-small", {}, 0.0};

  std::vector<detail::SampleError> tiny;
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < graphs; ++m) {
      const auto adj = detail::adjacency_from_mask(n, m);
      auto order = detail::identity_order(n);
      do {
        const auto events = events_in_order(adj, order);
        GreedyStrategy g;
        const auto got = detail::play(g, events).profit;
        const auto best = max_clique_partition(OrderedGraph::from_events(events)).value;
        tiny.push_back(got == best ? detail::SampleError{}
                                   : "n=" + std::to_string(n) + " mask=" + std::to_string(m) +
                                         ": greedy " + std::to_string(got) + " vs " +
                                         std::to_string(best));
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  r.checks.push_back(detail::reduce("greedy optimal for n <= 3, all graphs and orders", tiny,
                                    "graph/order pairs"));

  const auto samples = parallel_map(opt.samples, [&](std::size_t i) {
    Rng rng = sample_rng(opt.seed, i);
    const std::size_t n = 1 + uniform_below(rng, 12);
    const auto events = erdos_renyi(rng, n, kEdgeProbabilities[i % 3]);
    GreedyStrategy plain(false);
    GreedyStrategy np(true);
    const auto a = detail::play(plain, events);
    const auto b = detail::play(np, events);
    const auto best = max_clique_partition(OrderedGraph::from_events(events)).value;
    const auto k = static_cast<std::int64_t>(n / 2);
    std::pair<detail::SampleError, detail::SampleError> out;
    const std::string tag = "sample " + std::to_string(i) + " n=" + std::to_string(n);
    if (a.profit > 0 ? best > k * a.profit : best != 0) {
      out.first = tag + ": opt " + std::to_string(best) + " greedy " + std::to_string(a.profit);
    }
    if (a.partition != b.partition) out.second = tag + ": greedy and greedy-np differ";
    return out;
  });
  std::vector<detail::SampleError> bound, same;
  for (const auto& [x, y] : samples) {
    bound.push_back(x);
    same.push_back(y);
  }
  r.checks.push_back(
      detail::reduce("opt <= floor(n/2) * greedy on random graphs, n <= 12", bound, "graphs"));
  r.checks.push_back(detail::reduce("greedy-np makes the same choices as greedy", same, "graphs"));

  std::vector<detail::SampleError> lower;
  for (std::size_t n = 4; n <= 20; ++n) {
    const auto inst = greedy_nemesis(n);
    GreedyStrategy g;
    const auto trace = run_online(g, inst.events, Objective::kMaxProfit,
                                  OptSource::analytic_values(*inst.analytic_opt));
    const Ratio want(static_cast<std::int64_t>(n / 2), 1);
    const Ratio got = trace.steps.back().ratio;
    std::optional<std::string> err;
    if (!(got == want)) err = "n=" + std::to_string(n) + ": ratio " + got.to_string();
    if (!err && n <= 14) {
      GreedyStrategy again;
      const auto exact =
          run_online(again, inst.events, Objective::kMaxProfit, OptSource::exact());
      if (exact.steps != trace.steps) {
        err = "n=" + std::to_string(n) + ": analytic optimum disagrees with the solver";
      }
    }
    lower.push_back(err);
  }
  r.checks.push_back(
      detail::reduce("greedy ratio on its lower-bound instance = floor(n/2), n = 4..20", lower,
                     "instances"));
  return r;
}

// Per-game checks for the skeleton adversary. Subtree bounds are asserted
// inside the game after every extension.
struct SkeletonGameCheck {
  std::string label;
  detail::SampleError error;
  std::size_t tight_s1 = 0;
  std::size_t tight_s2 = 0;
};

inline SkeletonGameCheck check_skeleton_game(OnlineStrategy& strategy, std::size_t depth) {
  SkeletonGameCheck out;
  out.label = strategy.name() + " D=" + std::to_string(depth);
  try {
    SkeletonOptions options;
    options.core_depth = depth;
    const auto game = play_skeleton_game(strategy, options);
    const auto graph = skeleton_to_graph(game.tree);
    if (const auto err = validation_error(graph, cstar_partition(game.tree)); !err.empty()) {
      out.error = out.label + ": C* is not a clique partition: " + err;
      return out;
    }
    const auto& rep = game.report;
    if (cstar_partition(game.tree).profit() != rep.adversary_profit) {
      out.error = out.label + ": root adversary profit differs from the C* profit";
      return out;
    }
    if (rep.strategy_profit > 0 && rep.ratio.value() < 6.0 - rep.epsilon - 1e-12) {
      out.error = out.label + ": ratio " + rep.ratio.to_string() + " below 6 - " +
                  detail::fmt(rep.epsilon);
      return out;
    }
    for (const auto& st : rep.subtrees) {
      if (!st.deep || st.core_depth != 0 || (st.tentacle != 1 && st.tentacle != 2)) continue;
      const auto lhs = st.adversary_profit + 2 * static_cast<std::int64_t>(st.tentacle);
      if (lhs != 6 * st.strategy_profit) {
        out.error = out.label + ": tentacle base at node " + std::to_string(st.node) +
                    " is not tight";
        return out;
      }
      ++(st.tentacle == 1 ? out.tight_s1 : out.tight_s2);
    }
  } catch (const std::exception& e) {
    out.error = out.label + ": " + e.what();
  }
  return out;
}

inline constexpr std::size_t kSelectiveSeeds = 6;

inline SuiteReport verify_skeleton_lemmas(const VerifyOptions& opt) {
  SuiteReport r{"skeleton-lemmas", {}, 0.0};
  for (std::size_t d : opt.depths) {
    GreedyStrategy greedy;
    AlwaysCollectStrategy always;
    for (OnlineStrategy* s : {static_cast<OnlineStrategy*>(&greedy),
                              static_cast<OnlineStrategy*>(&always)}) {
      const auto g = check_skeleton_game(*s, d);
      const bool tight = g.tight_s1 > 0 && g.tight_s2 > 0;
      Check c{"subtree bounds, C*, final ratio, tight tentacle bases: " + g.label,
              !g.error && tight, {}};
      c.detail = g.error ? *g.error
                         : "tight bases s=1: " + std::to_string(g.tight_s1) +
                               ", s=2: " + std::to_string(g.tight_s2);
      r.checks.push_back(std::move(c));
    }
    // Irregular trees: pairs are taken with probability 0.7 and retried later.
    std::vector<detail::SampleError> errors;
    std::size_t grown = 0;
    for (std::size_t k = 0; k < kSelectiveSeeds; ++k) {
      SelectiveCollectStrategy s(opt.seed * 1000 + d * 100 + k, 0.7);
      const auto g = check_skeleton_game(s, d);
      errors.push_back(g.error);
      if (g.tight_s1 > 0) ++grown;
    }
    auto c = detail::reduce("subtree bounds, C*, final ratio: selective-collect D=" +
                                std::to_string(d),
                            errors, "games");
    c.detail += ", " + std::to_string(grown) + " reached the tentacles";
    r.checks.push_back(std::move(c));
  }
  return r;
}

// Cost objective: the adaptive instance and random graphs.
inline SuiteReport verify_mincc_bound(const VerifyOptions& opt) {
  SuiteReport r{"mincc-bound", {}, 0.0};
  std::vector<detail::SampleError> games;
  for (std::size_t n = 5; n <= 50; ++n) {
    GreedyStrategy g(true);
    const auto game = play_mincc_nemesis(g, 0, n);
    std::optional<std::string> err;
    const Ratio want(static_cast<std::int64_t>(n - 2), 1);
    if (game.stopped_early || !(game.trace.steps.back().ratio == want)) {
      err = "n=" + std::to_string(n) + ": ratio " + game.trace.steps.back().ratio.to_string();
    }
    if (!err && n <= 14) {
      GreedyStrategy again(true);
      const auto exact = run_online(again, game.instance.events, Objective::kMinCost,
                                    OptSource::exact());
      if (exact.steps != game.trace.steps) {
        err = "n=" + std::to_string(n) + ": analytic optimum disagrees with the solver";
      }
    }
    games.push_back(err);
  }
  r.checks.push_back(
      detail::reduce("greedy-np cost ratio = n - 2 on the adaptive instance, n = 5..50", games,
                     "games"));

  auto cost_opt = [](const std::vector<ArrivalEvent>& events) {
    return min_cost_partition(OrderedGraph::from_events(events)).value;
  };
  const auto samples = parallel_map(opt.samples, [&](std::size_t i) {
    Rng rng = sample_rng(opt.seed, i);
    const std::size_t n = 1 + uniform_below(rng, 9);
    const auto events = erdos_renyi(rng, n, kEdgeProbabilities[i % 3]);
    GreedyStrategy g(true);
    const auto got = detail::play(g, events).cost;
    const auto best = cost_opt(events);
    const auto factor = static_cast<std::int64_t>(n) - 2;
    if (best >= 1 ? got > factor * best : got != 0) {
      return detail::SampleError("sample " + std::to_string(i) + " n=" + std::to_string(n) +
                                 ": greedy-np cost " + std::to_string(got) + " vs opt " +
                                 std::to_string(best));
    }
    return detail::SampleError{};
  });
  r.checks.push_back(detail::reduce(
      "greedy-np cost <= (n-2) * opt on random graphs, n <= 9 (0 when opt is 0)", samples,
      "graphs"));

  const auto cliques = parallel_map(opt.samples, [&](std::size_t i) {
    Rng rng = sample_rng(opt.seed ^ 0x5bd1e995ULL, i);
    const std::size_t n = 1 + uniform_below(rng, 12);
    const auto events = disjoint_cliques(rng, n);
    GreedyStrategy g(true);
    const auto got = detail::play(g, events).cost;
    if (cost_opt(events) != 0 || got != 0) {
      return detail::SampleError("sample " + std::to_string(i) + ": greedy-np cost " +
                                 std::to_string(got));
    }
    return detail::SampleError{};
  });
  r.checks.push_back(detail::reduce(
      "greedy-np cost 0 on disjoint cliques in random order", cliques, "graphs"));
  return r;
}

struct OccMechanics {
  std::vector<PhaseRecord> phases;
  std::vector<std::int64_t> expected_delta;
  std::vector<std::size_t> batch_end;
  TraceStep worst;
  double target = 0.0;
};

inline OccMechanics run_occ_mechanics(double gamma, std::size_t phases, OccVariant variant) {
  const auto nem = occ_nemesis(gamma, phases, variant);
  OccStrategy occ(gamma);
  const auto trace = run_online(occ, nem.instance.events, Objective::kMaxProfit,
                                OptSource::analytic_values(*nem.instance.analytic_opt));
  OccMechanics m;
  m.phases = occ.phases();
  m.expected_delta = nem.batch_edges;
  m.batch_end = nem.batch_end;
  m.worst = *trace.worst();
  m.target = variant == OccVariant::kPlain ? occ_plain_ratio(gamma) : occ_triangle_ratio(gamma);
  return m;
}

// Phase commits and ratio of the doubling strategy on its batch instances.
inline SuiteReport verify_occ_mechanics() {
  SuiteReport r{"occ-mechanics", {}, 0.0};
  const double gamma = kAsymptoticPreset.gamma;
  const auto m = run_occ_mechanics(gamma, 6, OccVariant::kPlain);
  bool ok = m.phases.size() == m.expected_delta.size();
  std::string detail = std::to_string(m.phases.size()) + " phases";
  for (std::size_t j = 0; ok && j < m.phases.size(); ++j) {
    ok = m.phases[j].delta == m.expected_delta[j] && m.phases[j].trigger_step == m.batch_end[j];
    if (!ok) {
      detail = "phase " + std::to_string(j) + ": delta " + std::to_string(m.phases[j].delta) +
               " at step " + std::to_string(m.phases[j].trigger_step);
    }
  }
  r.checks.push_back({"phase j commits ceil(gamma^j) exactly at batch ends", ok, detail});
  const double w = m.worst.ratio.value();
  r.checks.push_back({"plain instance worst ratio within 10% of gamma(gamma+3)/(gamma-1)",
                      std::abs(w - m.target) <= 0.1 * m.target,
                      detail::fmt(w) + " vs " + detail::fmt(m.target) + " at t=" +
                          std::to_string(m.worst.t)});
  const auto tri = run_occ_mechanics(gamma, 5, OccVariant::kTriangle);
  const double wt = tri.worst.ratio.value();
  r.checks.push_back({"triangle instance worst ratio within 10% of (g^2+5g-2)/(g-1)",
                      std::abs(wt - tri.target) <= 0.1 * tri.target,
                      detail::fmt(wt) + " vs " + detail::fmt(tri.target)});
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"profvalue",       "table",
                                              "solver-oracle",   "greedy-small",
                                              "skeleton-lemmas", "mincc-bound",
                                              "occ-mechanics"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r;
  if (name == "profvalue") {
    r = verify_profvalue();
  } else if (name == "table") {
    r = verify_table();
  } else if (name == "solver-oracle") {
    r = verify_solver_oracle(opt);
  } else if (name == "greedy-small") {
    r = verify_greedy_small(opt);
  } else if (name == "skeleton-lemmas") {
    r = verify_skeleton_lemmas(opt);
  } else if (name == "mincc-bound") {
    r = verify_mincc_bound(opt);
  } else if (name == "occ-mechanics") {
    r = verify_occ_mechanics();
  } else {
    throw InvalidArgument("unknown suite '" + name + "'");
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace cliquestream
