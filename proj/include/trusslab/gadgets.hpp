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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "trusslab/graph.hpp"

namespace trusslab {

/// Balanced blow-up: every node u becomes copies u^0..u^{q-1}, and every base
/// edge {u, v} becomes all q^2 pairs {u^i, v^j}. Navigated implicitly from the
/// base graph; nothing of size q^2 m is stored.
///
/// Node u^i is encoded as u * q + i. For base edge e = {u, v} with u < v, the
/// mirror edge {u^i, v^j} gets id e * q^2 + i * q + j.
class BlowupView {
 public:
  BlowupView(Graph base, std::size_t q);

  std::size_t copies() const { return q_; }
  const Graph& base() const { return base_; }

  std::size_t node_count() const { return base_.node_count() * q_; }
  std::size_t edge_count() const { return base_.edge_count() * q_ * q_; }

  std::size_t degree(NodeId x) const { return base_.degree(x / q_) * q_; }
  NodeId neighbor(NodeId x, std::size_t i) const {
    return static_cast<NodeId>(base_.neighbor(static_cast<NodeId>(x / q_), i / q_) * q_ + i % q_);
  }
  bool adjacent(NodeId x, NodeId y) const {
    return base_.adjacent(static_cast<NodeId>(x / q_), static_cast<NodeId>(y / q_));
  }
  std::optional<EdgeId> edge_id(NodeId x, NodeId y) const;
  Edge endpoints(EdgeId id) const;

 private:
  Graph base_;
  std::size_t q_;
};

static_assert(GraphView<BlowupView>);

/// Throws std::invalid_argument for q == 0, std::length_error if the blown-up
/// ids would not fit in 32 bits.
BlowupView blowup(const Graph& g, std::size_t q);

/// Explicit copy of any view; edge ids are preserved. Throws
/// std::length_error above `max_edges`.
template <GraphView G>
Graph materialize(const G& view, std::size_t max_edges = std::size_t{1} << 26);

/// Graph plus disjoint spurious (x+2)-cliques used as order markers.
///
/// Spurious edges take the lowest edge ids, followed by the base edges in
/// their original order (base edge e has id spurious_edge_count() + e). Base
/// nodes keep their ids; clique nodes follow them.
struct AugmentedGraph {
  Graph graph;
  std::vector<bool> spurious;  // indexed by edge id
  std::size_t clique_parameter = 0;
  std::size_t spurious_clique_count = 0;
  std::size_t base_edge_count = 0;

  std::size_t spurious_edge_count() const { return graph.edge_count() - base_edge_count; }
};

/// Largest clique parameter accepted for a base graph with m edges: ceil(2 sqrt(m)).
std::size_t spurious_clique_cap(std::size_t m);

/// Adds ceil(m / C(x+2, 2)) disjoint (x+2)-cliques. Throws
/// std::invalid_argument if x > spurious_clique_cap(m).
AugmentedGraph add_spurious_cliques(const Graph& g, std::size_t x);

/// Nodes of b are shifted by a.node_count(); edge ids of b by a.edge_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Clique K_x plus x pendant nodes, pendant i (1-based) adjacent to the first
/// i clique nodes. Pendant i's edges have trussness i - 1 and, for x >= 2, the
/// clique edges have trussness x - 1, so every value in {0..x-1} occurs.
struct LadderGadget {
  Graph graph;
  std::vector<std::uint32_t> edge_trussness;  // known by construction
  std::vector<std::uint32_t> achieved;        // distinct values, ascending
};

LadderGadget ladder_gadget(std::size_t x);

/// K_{side,side} plus an apex adjacent to all 2 * side nodes.
Graph bipartite_apex(std::size_t side);

Graph complete_graph(std::size_t k);

// -- implementation --

template <GraphView G>
Graph materialize(const G& view, std::size_t max_edges) {
  const std::size_t m = view.edge_count();
  if (m > max_edges) throw std::length_error("view too large to materialize");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (EdgeId e = 0; e < m; ++e) edges.push_back(view.endpoints(e));
  return Graph::from_edges(edges, view.node_count());
}

}  // namespace trusslab
