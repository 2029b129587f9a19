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

// Slow, obviously-correct reference computations. They work from adjacency
// queries only and share no code with the library's algorithms.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "trusslab/graph.hpp"

namespace trusslab::oracle {

struct NodeTriple {
  NodeId a, b, c;
  auto operator<=>(const NodeTriple&) const = default;
};

/// All triangles by scanning every node triple, a < b < c.
template <GraphView G>
std::vector<NodeTriple> triangles(const G& g) {
  std::vector<NodeTriple> out;
  const auto n = static_cast<NodeId>(g.node_count());
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (NodeId c = b + 1; c < n; ++c) {
        if (g.adjacent(a, c) && g.adjacent(b, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

/// Support of every edge by scanning all nodes for common neighbors.
template <GraphView G>
std::vector<std::uint32_t> supports(const G& g) {
  std::vector<std::uint32_t> out(g.edge_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge uv = g.endpoints(e);
    for (NodeId w = 0; w < g.node_count(); ++w) {
      if (w != uv.u && w != uv.v && g.adjacent(uv.u, w) && g.adjacent(uv.v, w)) ++out[e];
    }
  }
  return out;
}

/// Degeneracy as the largest minimum degree over all induced subgraphs.
/// Exponential in n; intended for n <= 14.
inline std::size_t degeneracy(const Graph& g) {
  const std::size_t n = g.node_count();
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t lo = n;
    for (NodeId u = 0; u < n; ++u) {
      if (!(mask >> u & 1)) continue;
      std::size_t d = 0;
      for (NodeId v : g.neighbors(u)) d += mask >> v & 1;
      lo = std::min(lo, d);
    }
    best = std::max(best, lo);
  }
  return best;
}

/// Triangles of g as bitmasks over edge ids (m <= 64).
inline std::vector<std::uint64_t> triangle_masks(const Graph& g) {
  std::vector<std::uint64_t> out;
  for (const auto& t : triangles(g)) {
    out.push_back(std::uint64_t{1} << *g.edge_id(t.a, t.b) | std::uint64_t{1} << *g.edge_id(t.a, t.c) |
                  std::uint64_t{1} << *g.edge_id(t.b, t.c));
  }
  return out;
}

/// Per-edge trussness as the best minimum support over all edge subsets
/// containing the edge. Exponential in m; intended for m <= 16.
inline std::vector<std::uint32_t> subset_trussness(const Graph& g) {
  const std::size_t m = g.edge_count();
  const auto tris = triangle_masks(g);
  std::vector<std::uint32_t> best(m, 0);
  std::vector<std::uint32_t> sup(m);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
    std::fill(sup.begin(), sup.end(), 0);
    for (auto t : tris) {
      if ((t & s) != t) continue;
      for (auto bits = t; bits; bits &= bits - 1) ++sup[std::countr_zero(bits)];
    }
    std::uint32_t lo = UINT32_MAX;
    for (std::size_t e = 0; e < m; ++e) {
      if (s >> e & 1) lo = std::min(lo, sup[e]);
    }
    for (std::size_t e = 0; e < m; ++e) {
      if (s >> e & 1) best[e] = std::max(best[e], lo);
    }
  }
  return best;
}

/// k-truss by whole-graph recount and deletion until nothing changes.
inline std::vector<EdgeId> naive_k_truss(const Graph& g, std::uint32_t k) {
  std::vector<bool> alive(g.edge_count(), true);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<bool> next = alive;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!alive[e]) continue;
      const Edge uv = g.endpoints(e);
      std::uint32_t s = 0;
      for (NodeId w = 0; w < g.node_count(); ++w) {
        auto a = g.edge_id(uv.u, w);
        auto b = g.edge_id(uv.v, w);
        if (a && b && alive[*a] && alive[*b]) ++s;
      }
      if (s < k) {
        next[e] = false;
        changed = true;
      }
    }
    alive = std::move(next);
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (alive[e]) out.push_back(e);
  }
  return out;
}

/// Maximum of T_S / m_S over all non-empty edge subsets S, as a reduced
/// pair (T, m). Exponential in m; intended for m <= 21.
inline std::pair<std::uint64_t, std::uint64_t> max_triangle_density(const Graph& g) {
  const std::size_t m = g.edge_count();
  const auto tris = triangle_masks(g);
  std::uint64_t bt = 0, bm = 1;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
    std::uint64_t t = 0;
    for (auto tri : tris) t += (tri & s) == tri;
    const std::uint64_t ms = std::popcount(s);
    if (t * bm > bt * ms) {
      bt = t;
      bm = ms;
    }
  }
  return {bt, bm};
}

/// Number of positions i where the forward support of order[i] exceeds
/// max(T / m, (1 + eps) * min residual support), both taken in the graph
/// left after removing order[0..i-1]. Recounts everything per position.
inline std::size_t approx_order_violations(const Graph& g, const std::vector<EdgeId>& order,
                                           double eps) {
  const std::size_t m = g.edge_count();
  const auto tris = triangle_masks(g);
  const double density = m == 0 ? 0.0 : static_cast<double>(tris.size()) / static_cast<double>(m);
  std::uint64_t alive = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  std::size_t bad = 0;
  for (EdgeId e : order) {
    std::vector<std::uint32_t> sup(m, 0);
    for (auto t : tris) {
      if ((t & alive) != t) continue;
      for (std::size_t f = 0; f < m; ++f) sup[f] += (t >> f) & 1;
    }
    std::uint32_t low = UINT32_MAX;
    for (std::size_t f = 0; f < m; ++f) {
      if ((alive >> f) & 1) low = std::min(low, sup[f]);
    }
    if (sup[e] > std::max(density, (1.0 + eps) * low)) ++bad;
    alive &= ~(std::uint64_t{1} << e);
  }
  return bad;
}

}  // namespace trusslab::oracle
