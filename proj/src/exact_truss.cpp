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

#include "trusslab/exact_truss.hpp"

#include <stdexcept>

#include "trusslab/degeneracy.hpp"
#include "trusslab/gadgets.hpp"

namespace trusslab {

std::vector<EdgeId> peeling_truss_order(const Graph& g) {
  return truss_decomposition(g).second.order;
}

TrussDecomposition decomposition_from_order(const Graph& g, const TrussOrderOracle& oracle) {
  TrussDecomposition dec;
  const std::size_t m = g.edge_count();
  dec.edge_trussness.assign(m, 0);
  if (m == 0) return dec;

  // Blow-up edges have trussness 2 t(e) <= 2 d_G, so the ladder must supply
  // every odd value below 2 d_G.
  const std::size_t x = 2 * degeneracy_order(g).degeneracy;
  const Graph doubled = materialize(blowup(g, 2));
  const LadderGadget ladder = ladder_gadget(x);
  const Graph combined = disjoint_union(doubled, ladder.graph);
  const std::size_t doubled_edges = doubled.edge_count();

  const std::vector<EdgeId> order = oracle(combined);
  bool exact = false;
  try {
    exact = is_exact_truss_order(combined, order);
  } catch (const std::invalid_argument& err) {
    throw std::runtime_error(std::string("oracle output rejected: ") + err.what());
  }
  if (!exact) throw std::runtime_error("oracle output is not an exact truss order");

  // Every ladder edge of smaller trussness precedes a blow-up edge, so the
  // largest ladder value seen so far is 2k - 1 or 2k for an edge of value 2k.
  long long ladder_max = -1;
  std::vector<bool> assigned(m, false);
  for (EdgeId e : order) {
    if (e >= doubled_edges) {
      ladder_max = std::max<long long>(ladder_max, ladder.edge_trussness[e - doubled_edges]);
      continue;
    }
    const long long even = ladder_max < 0 ? 0 : ladder_max + (ladder_max & 1);
    const EdgeId base = e / 4;
    const auto value = static_cast<std::uint32_t>(even / 2);
    if (assigned[base] && dec.edge_trussness[base] != value) {
      throw std::runtime_error("mirror edges disagree on trussness");
    }
    assigned[base] = true;
    dec.edge_trussness[base] = value;
  }
  for (auto t : dec.edge_trussness) dec.trussness = std::max(dec.trussness, t);
  return dec;
}

}  // namespace trusslab
