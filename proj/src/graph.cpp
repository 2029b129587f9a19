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

#include "trusslab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace trusslab {

std::optional<EdgeId> Graph::edge_id(NodeId u, NodeId v) const {
  const std::size_t n = node_count();
  if (u >= n || v >= n || u == v) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

Graph Graph::from_edges(std::span<const Edge> edges, std::size_t min_node_count) {
  Graph g;
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  std::size_t n = min_node_count;
  for (Edge e : edges) {
    if (e.u == e.v) continue;
    if (e.u > e.v) std::swap(e.u, e.v);
    const std::uint64_t key = (static_cast<std::uint64_t>(e.u) << 32) | e.v;
    if (!seen.insert(key).second) continue;
    g.edges_.push_back(e);
    n = std::max<std::size_t>(n, static_cast<std::size_t>(e.v) + 1);
  }

  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

  // Bucket (neighbor, edge id) pairs per node, then sort each row.
  std::vector<std::pair<NodeId, EdgeId>> slots(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const Edge& e = g.edges_[id];
    slots[fill[e.u]++] = {e.v, id};
    slots[fill[e.v]++] = {e.u, id};
  }
  g.adj_.resize(slots.size());
  g.adj_edge_.resize(slots.size());
  for (std::size_t u = 0; u < n; ++u) {
    auto first = slots.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]);
    auto last = slots.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]);
    std::sort(first, last);
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    g.adj_[i] = slots[i].first;
    g.adj_edge_[i] = slots[i].second;
  }
  return g;
}

Graph build_graph(std::initializer_list<std::pair<NodeId, NodeId>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph::from_edges(list);
}

}  // namespace trusslab
