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

#include <cstdint>
#include <vector>

#include "trusslab/gadgets.hpp"
#include "trusslab/graph.hpp"
#include "trusslab/random_graph.hpp"

namespace trusslab::fixtures {

// A 4-clique {0,1,2,3} carrying the trussness, two triangles hanging off it
// through nodes 4 and 5, a path 5-6-7-0 back to the clique and a tail 7-8-9.
inline Graph clique_tail() {
  return build_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 2}, {4, 3}, {5, 3},
                      {5, 4}, {5, 6}, {6, 7}, {7, 0}, {8, 7}, {9, 8}});
}

// K_{4,4} plus an apex joined to all eight nodes.
inline Graph apex_example() { return bipartite_apex(4); }

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph::from_edges(edges, n);
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(edges);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < a; ++u) {
    for (NodeId v = 0; v < b; ++v) edges.push_back({u, static_cast<NodeId>(a + v)});
  }
  return Graph::from_edges(edges);
}

/// Seeded random graph on up to max_n nodes with a density drawn per seed.
inline Graph random_small(std::uint64_t seed, std::size_t min_n, std::size_t max_n) {
  const std::size_t n = min_n + seed * 7919 % (max_n - min_n + 1);
  const double p = 0.25 + 0.1 * static_cast<double>(seed * 104729 % 7);
  return gen_random(n, p, seed);
}

}  // namespace trusslab::fixtures
