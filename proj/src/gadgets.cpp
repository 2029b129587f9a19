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

#include "trusslab/gadgets.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace trusslab {

namespace {

constexpr std::size_t kMaxId = std::numeric_limits<std::uint32_t>::max();

void append_clique(std::vector<Edge>& edges, NodeId first, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      edges.push_back({static_cast<NodeId>(first + i), static_cast<NodeId>(first + j)});
    }
  }
}

}  // namespace

BlowupView::BlowupView(Graph base, std::size_t q) : base_(std::move(base)), q_(q) {
  if (q_ == 0) throw std::invalid_argument("blow-up multiplicity must be at least 1");
  if (base_.node_count() * q_ > kMaxId || base_.edge_count() * q_ * q_ > kMaxId) {
    throw std::length_error("blow-up ids exceed 32 bits");
  }
}

std::optional<EdgeId> BlowupView::edge_id(NodeId x, NodeId y) const {
  auto a = static_cast<NodeId>(x / q_);
  auto b = static_cast<NodeId>(y / q_);
  if (a == b) return std::nullopt;
  auto e = base_.edge_id(a, b);
  if (!e) return std::nullopt;
  if (a > b) std::swap(x, y);
  return static_cast<EdgeId>(*e * q_ * q_ + (x % q_) * q_ + (y % q_));
}

Edge BlowupView::endpoints(EdgeId id) const {
  const std::size_t qq = q_ * q_;
  const Edge be = base_.endpoints(static_cast<EdgeId>(id / qq));
  const std::size_t r = id % qq;
  return {static_cast<NodeId>(be.u * q_ + r / q_), static_cast<NodeId>(be.v * q_ + r % q_)};
}

BlowupView blowup(const Graph& g, std::size_t q) { return BlowupView(g, q); }

std::size_t spurious_clique_cap(std::size_t m) {
  // Smallest c with c^2 >= 4m.
  std::size_t c = 0;
  while (c * c < 4 * m) ++c;
  return c;
}

AugmentedGraph add_spurious_cliques(const Graph& g, std::size_t x) {
  const std::size_t m = g.edge_count();
  if (x > spurious_clique_cap(m)) {
    throw std::invalid_argument("spurious clique parameter exceeds ceil(2 sqrt(m))");
  }
  const std::size_t k = x + 2;
  const std::size_t clique_edges = k * (k - 1) / 2;
  const std::size_t count = (m + clique_edges - 1) / clique_edges;

  AugmentedGraph out;
  out.clique_parameter = x;
  out.spurious_clique_count = count;
  out.base_edge_count = m;

  std::vector<Edge> edges;
  edges.reserve(count * clique_edges + m);
  const std::size_t n = g.node_count();
  for (std::size_t c = 0; c < count; ++c) {
    append_clique(edges, static_cast<NodeId>(n + c * k), k);
  }
  const auto base = g.edges();
  edges.insert(edges.end(), base.begin(), base.end());
  out.graph = Graph::from_edges(edges, n + count * k);
  out.spurious.assign(out.graph.edge_count(), false);
  std::fill_n(out.spurious.begin(), count * clique_edges, true);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto shift = static_cast<NodeId>(a.node_count());
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  edges.reserve(a.edge_count() + b.edge_count());
  for (Edge e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph::from_edges(edges, a.node_count() + b.node_count());
}

LadderGadget ladder_gadget(std::size_t x) {
  if (x == 0) throw std::invalid_argument("ladder gadget needs x >= 1");
  LadderGadget out;
  std::vector<Edge> edges;
  append_clique(edges, 0, x);
  out.edge_trussness.assign(edges.size(), static_cast<std::uint32_t>(x - 1));
  for (std::size_t i = 1; i <= x; ++i) {
    const auto pendant = static_cast<NodeId>(x + i - 1);
    for (std::size_t c = 0; c < i; ++c) {
      edges.push_back({static_cast<NodeId>(c), pendant});
      out.edge_trussness.push_back(static_cast<std::uint32_t>(i - 1));
    }
  }
  out.graph = Graph::from_edges(edges, 2 * x);
  out.achieved = out.edge_trussness;
  std::sort(out.achieved.begin(), out.achieved.end());
  out.achieved.erase(std::unique(out.achieved.begin(), out.achieved.end()), out.achieved.end());
  return out;
}

Graph bipartite_apex(std::size_t side) {
  if (side == 0) throw std::invalid_argument("bipartite-apex side must be at least 1");
  std::vector<Edge> edges;
  const auto apex = static_cast<NodeId>(2 * side);
  for (std::size_t l = 0; l < side; ++l) {
    for (std::size_t r = 0; r < side; ++r) {
      edges.push_back({static_cast<NodeId>(l), static_cast<NodeId>(side + r)});
    }
  }
  for (NodeId u = 0; u < apex; ++u) edges.push_back({u, apex});
  return Graph::from_edges(edges);
}

Graph complete_graph(std::size_t k) {
  std::vector<Edge> edges;
  append_clique(edges, 0, k);
  return Graph::from_edges(edges, k);
}

}  // namespace trusslab
