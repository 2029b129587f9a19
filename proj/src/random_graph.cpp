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

#include "trusslab/random_graph.hpp"

#include <stdexcept>
#include <vector>

#include "trusslab/sampler.hpp"

namespace trusslab {

Graph gen_random(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0, 1]");
  std::vector<Edge> edges;
  if (p > 0.0 && n > 1) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    Rng rng = make_rng(seed);
    // Walk row u (pairs {u, v}, v > u) with a cursor; targets only increase.
    std::uint64_t index = 0;
    std::uint64_t row_base = 0;
    NodeId u = 0;
    for (;;) {
      const std::uint64_t skip = geometric_skip(p, rng);
      if (skip > pairs - index) break;
      index += skip;
      const std::uint64_t target = index - 1;
      while (target >= row_base + (n - 1 - u)) {
        row_base += n - 1 - u;
        ++u;
      }
      edges.push_back({u, static_cast<NodeId>(u + 1 + (target - row_base))});
    }
  }
  return Graph::from_edges(edges, n);
}

}  // namespace trusslab
