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
#include <cstdint>
#include <vector>

#include "trusslab/bucket_queue.hpp"
#include "trusslab/graph.hpp"

namespace trusslab {

/// Repeatedly removes a node of minimum residual degree (smallest id on ties).
template <GraphView G>
DegeneracyInfo degeneracy_order(const G& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> deg(n);
  for (NodeId u = 0; u < n; ++u) deg[u] = g.degree(u);

  BucketQueue queue(deg);
  DegeneracyInfo info;
  info.order.reserve(n);
  info.position.assign(n, 0);
  info.forward_degree.assign(n, 0);
  while (!queue.empty()) {
    auto [u, residual] = queue.pop_min();
    info.position[u] = info.order.size();
    info.order.push_back(static_cast<NodeId>(u));
    info.forward_degree[u] = residual;
    info.degeneracy = std::max(info.degeneracy, residual);
    const std::size_t du = g.degree(static_cast<NodeId>(u));
    for (std::size_t i = 0; i < du; ++i) {
      NodeId w = g.neighbor(static_cast<NodeId>(u), i);
      if (queue.contains(w)) queue.decrement(w);
    }
  }
  return info;
}

/// Number of forward wedges: sum over nodes of C(forward_degree, 2).
inline std::uint64_t forward_wedge_count(const DegeneracyInfo& d) {
  std::uint64_t w = 0;
  for (std::uint64_t f : d.forward_degree) {
    if (f > 1) w += f * (f - 1) / 2;
  }
  return w;
}

template <GraphView G>
std::uint64_t forward_wedge_count(const G& g, const DegeneracyInfo& d) {
  (void)g;
  return forward_wedge_count(d);
}

/// Forward neighbors of every node, sorted by position in the order.
template <GraphView G>
std::vector<std::vector<NodeId>> forward_adjacency(const G& g, const DegeneracyInfo& d) {
  std::vector<std::vector<NodeId>> fwd(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    auto& out = fwd[u];
    out.reserve(d.forward_degree[u]);
    const std::size_t du = g.degree(u);
    for (std::size_t i = 0; i < du; ++i) {
      NodeId w = g.neighbor(u, i);
      if (d.position[w] > d.position[u]) out.push_back(w);
    }
    std::sort(out.begin(), out.end(),
              [&](NodeId a, NodeId b) { return d.position[a] < d.position[b]; });
  }
  return fwd;
}

}  // namespace trusslab
