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

// Seeded random instances for the verification suites. Only raw engine
// outputs are used so that results match across standard libraries.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cliquestream/errors.hpp"
#include "cliquestream/graph.hpp"

namespace cliquestream {

using Rng = std::mt19937_64;

// Independent stream for sample `index` of a run seeded with `seed`.
inline Rng sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

// Uniform in [0, bound) by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("uniform_below: empty range");
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

// Uniform in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::vector<VertexId> random_order(Rng& rng, std::size_t n) {
  std::vector<VertexId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<VertexId>(i);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[uniform_below(rng, i)]);
  }
  return order;
}

// Arrival events for a graph given by its adjacency on labels 0..n-1,
// revealed in `order` (order[k] arrives k-th).
inline std::vector<ArrivalEvent> events_in_order(const std::vector<std::vector<char>>& adj,
                                                 const std::vector<VertexId>& order) {
  const std::size_t n = order.size();
  std::vector<ArrivalEvent> events;
  for (std::size_t k = 0; k < n; ++k) {
    ArrivalEvent e{static_cast<VertexId>(k), {}};
    for (std::size_t i = 0; i < k; ++i) {
      if (adj[order[k]][order[i]]) e.back_neighbors.push_back(static_cast<VertexId>(i));
    }
    events.push_back(std::move(e));
  }
  return events;
}

// G(n, p) revealed in a uniformly random order.
inline std::vector<ArrivalEvent> erdos_renyi(Rng& rng, std::size_t n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("edge probability must lie in [0, 1]");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      adj[u][v] = adj[v][u] = uniform_unit(rng) < p ? 1 : 0;
    }
  }
  return events_in_order(adj, random_order(rng, n));
}

// Disjoint union of cliques (random sizes summing to n) revealed in a
// uniformly random order.
inline std::vector<ArrivalEvent> disjoint_cliques(Rng& rng, std::size_t n) {
  std::vector<std::size_t> label(n, 0);
  std::size_t current = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (v > 0 && uniform_below(rng, 3) == 0) ++current;
    label[v] = current;
  }
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) adj[u][v] = adj[v][u] = label[u] == label[v];
  }
  return events_in_order(adj, random_order(rng, n));
}

inline constexpr double kEdgeProbabilities[] = {0.2, 0.5, 0.8};

}  // namespace cliquestream
