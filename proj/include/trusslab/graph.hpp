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

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace trusslab {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Unordered node pair, stored with `u < v` once normalized.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// The navigation contract every algorithm in this library runs against.
///
/// Neighbor lists must be sorted ascending by node id, edge ids must be dense
/// in [0, edge_count()), and `endpoints(e)` returns the pair with u < v.
template <class G>
concept GraphView = requires(const G& g, NodeId u, NodeId v, std::size_t i,
                             EdgeId e) {
  { g.node_count() } -> std::convertible_to<std::size_t>;
  { g.edge_count() } -> std::convertible_to<std::size_t>;
  { g.degree(u) } -> std::convertible_to<std::size_t>;
  { g.neighbor(u, i) } -> std::convertible_to<NodeId>;
  { g.adjacent(u, v) } -> std::convertible_to<bool>;
  { g.edge_id(u, v) } -> std::convertible_to<std::optional<EdgeId>>;
  { g.endpoints(e) } -> std::convertible_to<Edge>;
};

/// Immutable undirected simple graph in CSR form.
///
/// Each adjacency slot carries the id of the edge it represents, so pair to
/// id lookup is a binary search in the smaller of the two neighbor lists.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }

  std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }
  NodeId neighbor(NodeId u, std::size_t i) const { return adj_[offsets_[u] + i]; }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {adj_.data() + offsets_[u], degree(u)};
  }
  /// Edge ids parallel to `neighbors(u)`.
  std::span<const EdgeId> incident_edges(NodeId u) const {
    return {adj_edge_.data() + offsets_[u], degree(u)};
  }

  bool adjacent(NodeId u, NodeId v) const { return edge_id(u, v).has_value(); }
  std::optional<EdgeId> edge_id(NodeId u, NodeId v) const;

  Edge endpoints(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Builds a simple graph. Self-loops and repeated pairs are dropped; edge
  /// ids follow first occurrence. `min_node_count` pads with isolated nodes.
  static Graph from_edges(std::span<const Edge> edges, std::size_t min_node_count = 0);

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adj_;
  std::vector<EdgeId> adj_edge_;
  std::vector<Edge> edges_;
};

static_assert(GraphView<Graph>);

inline Graph build_graph(std::span<const Edge> edges) { return Graph::from_edges(edges); }
Graph build_graph(std::initializer_list<std::pair<NodeId, NodeId>> edges);

/// Minimum-degree peeling order of the nodes.
struct DegeneracyInfo {
  std::vector<NodeId> order;
  std::vector<std::size_t> position;  // position[u] = index of u in order
  std::size_t degeneracy = 0;
  std::vector<std::size_t> forward_degree;  // neighbors later in the order
};

}  // namespace trusslab
