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

// Text instance format, one arrival per line:
//
//   # optional comment
//   v 1 :
//   v 2 : 1
//   v 3 : 1 2
//
// Ids are 1-based and must appear as 1..n in order; each line lists the
// earlier neighbors of that vertex. Blank lines and '#' comments are ignored.
// The canonical writer emits neighbor lists in ascending order and no
// trailing whitespace.

#pragma once

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "cliquestream/errors.hpp"
#include "cliquestream/graph.hpp"

namespace cliquestream {

namespace detail {

inline VertexId parse_id(const std::string& token, std::size_t line) {
  std::uint64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value == 0 ||
      value > std::numeric_limits<VertexId>::max()) {
    throw ParseError(line, "expected a positive vertex id, got '" + token + "'");
  }
  return static_cast<VertexId>(value - 1);
}

}  // namespace detail

inline std::vector<ArrivalEvent> read_instance(std::istream& in) {
  std::vector<ArrivalEvent> events;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::string spaced;
    spaced.reserve(raw.size() + 4);
    for (char c : raw) {
      if (c == ':') {
        spaced += " : ";
      } else {
        spaced += c;
      }
    }
    std::istringstream tokens(spaced);
    std::string tok;
    if (!(tokens >> tok)) continue;
    if (tok != "v") throw ParseError(line_no, "expected 'v', got '" + tok + "'");
    if (!(tokens >> tok)) throw ParseError(line_no, "missing vertex id");
    const VertexId id = detail::parse_id(tok, line_no);
    if (id != events.size()) {
      throw ParseError(line_no, "vertex ids must be 1..n in order; expected " +
                                    std::to_string(events.size() + 1) +
                                    ", got " + std::to_string(id + 1));
    }
    if (!(tokens >> tok) || tok != ":") throw ParseError(line_no, "missing ':'");
    ArrivalEvent event{id, {}};
    while (tokens >> tok) {
      const VertexId u = detail::parse_id(tok, line_no);
      if (u >= id) {
        throw ParseError(line_no, "neighbor " + std::to_string(u + 1) +
                                      " does not precede vertex " +
                                      std::to_string(id + 1));
      }
      event.back_neighbors.push_back(u);
    }
    std::sort(event.back_neighbors.begin(), event.back_neighbors.end());
    if (std::adjacent_find(event.back_neighbors.begin(),
                           event.back_neighbors.end()) !=
        event.back_neighbors.end()) {
      throw ParseError(line_no, "duplicate neighbor");
    }
    events.push_back(std::move(event));
  }
  return events;
}

inline std::vector<ArrivalEvent> read_instance_string(const std::string& text) {
  std::istringstream in(text);
  return read_instance(in);
}

inline void write_instance(std::ostream& out,
                           std::span<const ArrivalEvent> events) {
  for (const auto& e : events) {
    std::vector<VertexId> back = e.back_neighbors;
    std::sort(back.begin(), back.end());
    out << "v " << e.vertex + 1 << " :";
    for (VertexId u : back) out << ' ' << u + 1;
    out << '\n';
  }
}

inline std::string write_instance_string(std::span<const ArrivalEvent> events) {
  std::ostringstream out;
  write_instance(out, events);
  return out.str();
}

}  // namespace cliquestream
