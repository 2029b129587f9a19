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

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "trusslab/degeneracy.hpp"
#include "trusslab/graph.hpp"

namespace trusslab {

/// A triangle in canonical form: node ids ascending, edge ids ascending.
struct Triangle {
  std::array<NodeId, 3> nodes{};
  std::array<EdgeId, 3> edges{};

  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle& a, const Triangle& b) { return a.nodes <=> b.nodes; }
};

struct SupportTable {
  std::vector<std::uint32_t> support;  // indexed by edge id
  std::uint64_t triangle_count = 0;
};

/// Calls `fn(w)` for every common neighbor w of u and v.
///
/// Walks the shorter neighbor list and probes the longer one, which costs
/// O(min{deg(u), deg(v)} log) per call.
template <GraphView G, class Fn>
void for_each_common_neighbor(const G& g, NodeId u, NodeId v, Fn&& fn) {
  if (g.degree(u) > g.degree(v)) std::swap(u, v);
  const std::size_t du = g.degree(u);
  for (std::size_t i = 0; i < du; ++i) {
    NodeId w = g.neighbor(u, i);
    if (w != v && g.adjacent(v, w)) fn(w);
  }
}

template <GraphView G>
SupportTable compute_supports(const G& g) {
  SupportTable table;
  const std::size_t m = g.edge_count();
  table.support.assign(m, 0);
  std::uint64_t total = 0;
  for (EdgeId e = 0; e < m; ++e) {
    const Edge uv = g.endpoints(e);
    std::uint32_t s = 0;
    for_each_common_neighbor(g, uv.u, uv.v, [&](NodeId) { ++s; });
    table.support[e] = s;
    total += s;
  }
  table.triangle_count = total / 3;
  return table;
}

/// Canonical triangle on {center, a, b} if the wedge is closed.
template <GraphView G>
std::optional<Triangle> triangle_of_wedge(const G& g, NodeId center, NodeId a, NodeId b) {
  auto ab = g.edge_id(a, b);
  if (!ab) return std::nullopt;
  auto ca = g.edge_id(center, a);
  auto cb = g.edge_id(center, b);
  if (!ca || !cb) return std::nullopt;
  Triangle t;
  t.nodes = {center, a, b};
  t.edges = {*ca, *cb, *ab};
  std::sort(t.nodes.begin(), t.nodes.end());
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

/// Enumerates every triangle once, at its earliest node in the degeneracy
/// order. Returns the triangle count. The emission order is unspecified.
template <GraphView G, class Sink>
std::uint64_t list_triangles(const G& g, const DegeneracyInfo& d, Sink&& sink) {
  std::uint64_t count = 0;
  if constexpr (requires(NodeId u) { g.incident_edges(u); }) {
    // CSR graph: edge ids come for free. For each center c mark its forward
    // neighbors, then close every forward edge a-b with a, b both marked.
    const std::size_t n = g.node_count();
    std::vector<std::size_t> off(n + 1, 0);
    for (NodeId u = 0; u < n; ++u) off[u + 1] = off[u] + d.forward_degree[u];
    std::vector<NodeId> fnode(off[n]);
    std::vector<EdgeId> fedge(off[n]);
    for (NodeId u = 0; u < n; ++u) {
      auto nb = g.neighbors(u);
      auto ids = g.incident_edges(u);
      std::size_t k = off[u];
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (d.position[nb[i]] > d.position[u]) {
          fnode[k] = nb[i];
          fedge[k++] = ids[i];
        }
      }
    }
    constexpr EdgeId kNone = ~EdgeId{0};
    std::vector<EdgeId> mark(n, kNone);
    for (NodeId c : d.order) {
      for (std::size_t i = off[c]; i < off[c + 1]; ++i) mark[fnode[i]] = fedge[i];
      for (std::size_t i = off[c]; i < off[c + 1]; ++i) {
        const NodeId a = fnode[i];
        for (std::size_t j = off[a]; j < off[a + 1]; ++j) {
          const NodeId b = fnode[j];
          if (mark[b] == kNone) continue;
          Triangle t;
          t.nodes = {c, a, b};
          t.edges = {fedge[i], mark[b], fedge[j]};
          std::sort(t.nodes.begin(), t.nodes.end());
          std::sort(t.edges.begin(), t.edges.end());
          ++count;
          sink(t);
        }
      }
      for (std::size_t i = off[c]; i < off[c + 1]; ++i) mark[fnode[i]] = kNone;
    }
  } else {
    auto fwd = forward_adjacency(g, d);
    for (NodeId c : d.order) {
      const auto& f = fwd[c];
      for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
          if (auto t = triangle_of_wedge(g, c, f[i], f[j])) {
            ++count;
            sink(*t);
          }
        }
      }
    }
  }
  return count;
}

template <GraphView G, class Sink>
std::uint64_t list_triangles(const G& g, Sink&& sink) {
  return list_triangles(g, degeneracy_order(g), std::forward<Sink>(sink));
}

template <GraphView G>
std::vector<Triangle> collect_triangles(const G& g) {
  std::vector<Triangle> out;
  list_triangles(g, [&](const Triangle& t) { out.push_back(t); });
  return out;
}

template <GraphView G>
std::uint64_t count_triangles(const G& g) {
  return list_triangles(g, [](const Triangle&) {});
}

}  // namespace trusslab
