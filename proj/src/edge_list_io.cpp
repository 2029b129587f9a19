// Copyright 2026 The TrussLab Authors
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

#include "trusslab/edge_list_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>

namespace trusslab {

namespace {

constexpr std::string_view kSpace = " \t\r";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kSpace);
  return s.substr(b, e - b + 1);
}

NodeId parse_node(std::string_view& rest, std::size_t line) {
  rest = trim(rest);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc() || ptr == rest.data()) {
    throw EdgeListError(line, "expected a non-negative integer node id");
  }
  if (value >= std::numeric_limits<NodeId>::max()) throw EdgeListError(line, "node id too large");
  rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
  if (!rest.empty() && kSpace.find(rest.front()) == std::string_view::npos && rest.front() != '#') {
    throw EdgeListError(line, "unexpected character after node id");
  }
  return static_cast<NodeId>(value);
}

}  // namespace

LabeledGraph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<bool> labels;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view rest = trim(raw);
    if (rest.empty() || rest.front() == '#') continue;
    const NodeId u = parse_node(rest, line);
    const NodeId v = parse_node(rest, line);
    rest = trim(rest);
    bool spurious = false;
    if (!rest.empty()) {
      if (rest.front() != '#') throw EdgeListError(line, "expected exactly two node ids");
      spurious = trim(rest.substr(1)) == "spurious";
    }
    edges.push_back({u, v});
    labels.push_back(spurious);
  }

  LabeledGraph out;
  out.graph = Graph::from_edges(edges);
  out.spurious.assign(out.graph.edge_count(), false);
  // Dropped duplicates never precede their first occurrence, so a kept edge's
  // label is the one from the first line that named it.
  std::vector<bool> done(out.graph.edge_count(), false);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto id = out.graph.edge_id(edges[i].u, edges[i].v);
    if (!id || done[*id]) continue;
    done[*id] = true;
    out.spurious[*id] = labels[i];
  }
  return out;
}

LabeledGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<bool>& spurious) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge uv = g.endpoints(e);
    out << uv.u << ' ' << uv.v;
    if (e < spurious.size() && spurious[e]) out << " # spurious";
    out << '\n';
  }
}

}  // namespace trusslab
