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

// Exact truss decomposition by min-support peeling, plus replay utilities
// that recompute forward supports of an arbitrary edge order.
//
// Trussness is 0-based throughout: an edge in a k-truss lies in at least k
// triangles of that truss, so a k-clique has trussness k - 2.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trusslab/bucket_queue.hpp"
#include "trusslab/graph.hpp"
#include "trusslab/triangles.hpp"

namespace trusslab {

struct TrussDecomposition {
  std::vector<std::uint32_t> edge_trussness;  // indexed by edge id
  std::uint32_t trussness = 0;
};

/// An edge permutation with the forward support of each position, i.e. the
/// number of triangles e_i closes with edges at positions >= i.
struct EdgeOrder {
  std::vector<EdgeId> order;
  std::vector<std::uint32_t> forward_support;
};

/// Calls `fn(w, e_uw, e_vw)` for each triangle {u, v, w} on edge {u, v}.
template <GraphView G, class Fn>
void for_each_triangle_on_edge(const G& g, NodeId u, NodeId v, Fn&& fn) {
  if (g.degree(u) > g.degree(v)) std::swap(u, v);
  const std::size_t du = g.degree(u);
  for (std::size_t i = 0; i < du; ++i) {
    NodeId w = g.neighbor(u, i);
    if (w == v) continue;
    auto vw = g.edge_id(v, w);
    if (!vw) continue;
    fn(w, *g.edge_id(u, w), *vw);
  }
}

/// Peels a minimum-support edge at a time (lowest id on ties). The trussness
/// of an edge is the largest support seen at extraction up to its removal.
template <GraphView G>
std::pair<TrussDecomposition, EdgeOrder> truss_decomposition(const G& g) {
  const std::size_t m = g.edge_count();
  auto table = compute_supports(g);
  BucketQueue queue(std::vector<std::size_t>(table.support.begin(), table.support.end()));

  TrussDecomposition dec;
  dec.edge_trussness.assign(m, 0);
  EdgeOrder ord;
  ord.order.reserve(m);
  ord.forward_support.reserve(m);

  std::size_t level = 0;
  while (!queue.empty()) {
    auto [e, s] = queue.pop_min();
    level = std::max(level, s);
    dec.edge_trussness[e] = static_cast<std::uint32_t>(level);
    ord.order.push_back(static_cast<EdgeId>(e));
    ord.forward_support.push_back(static_cast<std::uint32_t>(s));
    const Edge uv = g.endpoints(static_cast<EdgeId>(e));
    for_each_triangle_on_edge(g, uv.u, uv.v, [&](NodeId, EdgeId a, EdgeId b) {
      if (queue.contains(a) && queue.contains(b)) {
        queue.decrement(a);
        queue.decrement(b);
      }
    });
  }
  dec.trussness = static_cast<std::uint32_t>(level);
  return {std::move(dec), std::move(ord)};
}

template <GraphView G>
std::uint32_t trussness(const G& g) {
  return truss_decomposition(g).first.trussness;
}

/// Edge ids of the maximal k-truss, ascending; obtained by repeatedly
/// deleting edges whose residual support is below k.
template <GraphView G>
std::vector<EdgeId> max_truss_subgraph(const G& g, std::uint32_t k) {
  const std::size_t m = g.edge_count();
  auto support = compute_supports(g).support;
  std::vector<bool> alive(m, true);
  std::vector<bool> queued(m, false);
  std::vector<EdgeId> pending;
  for (EdgeId e = 0; e < m; ++e) {
    if (support[e] < k) {
      queued[e] = true;
      pending.push_back(e);
    }
  }
  while (!pending.empty()) {
    EdgeId e = pending.back();
    pending.pop_back();
    alive[e] = false;
    const Edge uv = g.endpoints(e);
    for_each_triangle_on_edge(g, uv.u, uv.v, [&](NodeId, EdgeId a, EdgeId b) {
      if (!alive[a] || !alive[b]) return;
      for (EdgeId x : {a, b}) {
        if (--support[x] < k && !queued[x]) {
          queued[x] = true;
          pending.push_back(x);
        }
      }
    });
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < m; ++e) {
    if (alive[e]) out.push_back(e);
  }
  return out;
}

/// Per-position forward support sup_{G>=e_i}(e_i) and minimum residual
/// support min-sup(G>=e_i) of an arbitrary edge order.
struct OrderReplay {
  std::vector<std::uint32_t> forward_support;
  std::vector<std::uint32_t> min_support;
};

/// Replays removals in the given order. Throws std::invalid_argument if the
/// order is not a permutation of the edge ids.
template <GraphView G>
OrderReplay replay_order(const G& g, std::span<const EdgeId> order) {
  const std::size_t m = g.edge_count();
  if (order.size() != m) throw std::invalid_argument("edge order length differs from edge count");
  std::vector<bool> seen(m, false);
  for (EdgeId e : order) {
    if (e >= m || seen[e]) throw std::invalid_argument("edge order is not a permutation");
    seen[e] = true;
  }

  auto residual = compute_supports(g).support;
  std::uint32_t max_sup = 0;
  for (auto s : residual) max_sup = std::max(max_sup, s);
  std::vector<std::size_t> histogram(static_cast<std::size_t>(max_sup) + 1, 0);
  for (auto s : residual) ++histogram[s];

  OrderReplay out;
  out.forward_support.reserve(m);
  out.min_support.reserve(m);
  std::vector<bool> alive(m, true);
  std::size_t floor = 0;
  for (EdgeId e : order) {
    while (histogram[floor] == 0) ++floor;
    out.min_support.push_back(static_cast<std::uint32_t>(floor));
    out.forward_support.push_back(residual[e]);
    --histogram[residual[e]];
    alive[e] = false;
    const Edge uv = g.endpoints(e);
    for_each_triangle_on_edge(g, uv.u, uv.v, [&](NodeId, EdgeId a, EdgeId b) {
      if (!alive[a] || !alive[b]) return;
      for (EdgeId x : {a, b}) {
        --histogram[residual[x]];
        --residual[x];
        ++histogram[residual[x]];
        floor = std::min<std::size_t>(floor, residual[x]);
      }
    });
  }
  return out;
}

/// True iff every position removes an edge of minimum residual support.
template <GraphView G>
bool is_exact_truss_order(const G& g, std::span<const EdgeId> order) {
  auto replay = replay_order(g, order);
  return replay.forward_support == replay.min_support;
}

/// Number of positions breaking the (1+epsilon)-approximate truss order
/// bound sup_{G>=e_i}(e_i) <= max{T/m, (1+epsilon) min-sup(G>=e_i)}, where
/// T and m are the triangle and edge counts of g.
template <GraphView G>
std::size_t count_approx_order_violations(const G& g, std::span<const EdgeId> order,
                                          double epsilon) {
  auto replay = replay_order(g, order);
  const std::uint64_t m = g.edge_count();
  const std::uint64_t t = compute_supports(g).triangle_count;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < replay.forward_support.size(); ++i) {
    const std::uint64_t fs = replay.forward_support[i];
    if (fs * m <= t) continue;
    if (static_cast<double>(fs) <= (1.0 + epsilon) * replay.min_support[i] + 1e-9) continue;
    ++bad;
  }
  return bad;
}

/// Any function producing an exact truss order of its input graph.
using TrussOrderOracle = std::function<std::vector<EdgeId>(const Graph&)>;

/// Recovers the truss decomposition of g from a truss-order oracle alone.
///
/// The oracle runs on the disjoint union of the 2-fold blow-up of g (all
/// trussness values even) and a ladder gadget whose edge trussness values
/// are known in advance; each blow-up edge is located between ladder edges
/// and its value read off. Throws std::runtime_error if the oracle output is
/// not an exact truss order of that union.
TrussDecomposition decomposition_from_order(const Graph& g, const TrussOrderOracle& oracle);

/// Exact truss order by peeling, usable as an oracle.
std::vector<EdgeId> peeling_truss_order(const Graph& g);

}  // namespace trusslab
