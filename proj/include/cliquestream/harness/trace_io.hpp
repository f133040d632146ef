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

// Trace files. JSON layout:
//   {"meta": {"strategy", "params", "instance", "objective", "seed"},
//    "steps": [{"t", "strategy_value", "opt_value", "ratio_num", "ratio_den"}],
//    "worst": {"t", "ratio": {"num", "den"}} or null}
// An infinite ratio is stored as 1/0. CSV columns: t, strategy_value,
// opt_value, ratio (6 decimals, "inf" when infinite).

#pragma once

#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "json.hpp"

#include "cliquestream/errors.hpp"
#include "cliquestream/ratio.hpp"

namespace cliquestream {

using Json = nlohmann::ordered_json;

struct TraceMeta {
  std::string strategy;
  Json params = Json::object();
  std::string instance;
  Objective objective = Objective::kMaxProfit;
  std::optional<std::uint64_t> seed;
};

inline Json trace_to_json(const TraceMeta& meta, const RatioTrace& trace) {
  Json j;
  j["meta"] = {{"strategy", meta.strategy},
               {"params", meta.params},
               {"instance", meta.instance},
               {"objective", std::string(to_string(meta.objective))},
               {"seed", meta.seed ? Json(*meta.seed) : Json(nullptr)}};
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"t", s.t},
                     {"strategy_value", s.strategy_value},
                     {"opt_value", s.optimal_value},
                     {"ratio_num", s.ratio.num()},
                     {"ratio_den", s.ratio.den()}});
  }
  j["steps"] = std::move(steps);
  if (const auto w = trace.worst()) {
    j["worst"] = {{"t", w->t}, {"ratio", {{"num", w->ratio.num()}, {"den", w->ratio.den()}}}};
  } else {
    j["worst"] = nullptr;
  }
  return j;
}

inline void write_trace_json(std::ostream& out, const TraceMeta& meta, const RatioTrace& trace) {
  out << trace_to_json(meta, trace).dump(2) << '\n';
}

// Reads a trace back and recomputes every ratio from the raw values;
// a stored ratio that disagrees throws InvalidArgument.
inline std::pair<TraceMeta, RatioTrace> trace_from_json(const Json& j) {
  TraceMeta meta;
  RatioTrace trace;
  try {
    const auto& m = j.at("meta");
    meta.strategy = m.at("strategy").get<std::string>();
    meta.params = m.at("params");
    meta.instance = m.at("instance").get<std::string>();
    meta.objective = parse_objective(m.at("objective").get<std::string>());
    if (!m.at("seed").is_null()) meta.seed = m.at("seed").get<std::uint64_t>();
    trace.objective = meta.objective;
    for (const auto& s : j.at("steps")) {
      trace.record(s.at("strategy_value").get<std::int64_t>(), s.at("opt_value").get<std::int64_t>());
      const auto& last = trace.steps.back();
      const Ratio stored(s.at("ratio_num").get<std::int64_t>(), s.at("ratio_den").get<std::int64_t>());
      if (s.at("t").get<std::size_t>() != last.t || !(stored == last.ratio)) {
        throw InvalidArgument("trace step " + std::to_string(last.t) +
                              " does not match its recomputed ratio");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed trace: ") + e.what());
  }
  return {std::move(meta), std::move(trace)};
}

inline std::pair<TraceMeta, RatioTrace> read_trace_json(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed trace: ") + e.what());
  }
  return trace_from_json(j);
}

inline void write_trace_csv(std::ostream& out, const RatioTrace& trace) {
  out << "t,strategy_value,opt_value,ratio\n";
  for (const auto& s : trace.steps) {
    out << s.t << ',' << s.strategy_value << ',' << s.optimal_value << ','
        << s.ratio.to_string(6) << '\n';
  }
}

}  // namespace cliquestream
