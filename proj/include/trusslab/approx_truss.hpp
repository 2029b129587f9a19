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
#include <span>
#include <vector>

#include "trusslab/degeneracy.hpp"
#include "trusslab/graph.hpp"
#include "trusslab/rational.hpp"
#include "trusslab/sampler.hpp"

namespace trusslab {

/// Edge order obtained by min-degree peeling of a sampled triangle hypergraph.
struct ApproxTrussOrder {
  std::vector<EdgeId> order;
  std::vector<std::uint32_t> sampled_forward_degree;  // per position
  double certified_epsilon = 0.0;
  HypergraphSample sample;
};

/// Repeatedly removes the hypergraph vertex of least degree (smallest edge id
/// on ties) together with its hyperedges.
ApproxTrussOrder hypergraph_degeneracy_order(HypergraphSample sample);

/// Degeneracy order, then hypergraph sample, then hypergraph peeling. When the
/// sampler falls back to the full hypergraph the result is an exact truss order.
template <GraphView G>
ApproxTrussOrder approx_truss_order(const G& g, const SamplerConfig& cfg) {
  const DegeneracyInfo d = degeneracy_order(g);
  ApproxTrussOrder out = hypergraph_degeneracy_order(sample_hypergraph(g, d, cfg));
  out.certified_epsilon = cfg.effective_epsilon(g.node_count());
  return out;
}

/// True iff the first spurious edge precedes the last original edge. Throws
/// std::invalid_argument when the label vector does not match the order.
bool marker_test(std::span<const EdgeId> order, const std::vector<bool>& spurious);

/// How the clique parameter grows between marker rounds.
enum class Growth {
  kProof,       // x <- ceil((1 + eps/6) x)
  kPseudocode,  // x <- ceil((1 + eps) x)
};

struct MarkerRound {
  std::size_t x = 0;
  bool spurious_first = false;
  double realized_p = 0.0;
  bool fell_back_to_exact = false;
  std::size_t hyperedges = 0;
};

struct EstimateResult {
  Rational estimate;         // for the input graph, i.e. after dividing by 6
  bool exact_flag = false;   // certified by the zero or single-multiple test
  std::size_t iterations = 0;
  std::size_t last_marked_x = 1;  // final x for which the marker test held
  bool hit_x_cap = false;
  std::vector<MarkerRound> trace;
};

/// (1 +- epsilon) trussness estimate: amplifies g_in by a 6-fold blow-up plus
/// a triangle, then grows the spurious clique size x while the spurious edges
/// still appear before the last original edge of an approximate truss order.
/// cfg supplies zeta and the seed; each round draws from its own substream.
/// Throws std::invalid_argument unless 0 < epsilon < 1.
EstimateResult estimate_trussness(const Graph& g_in, double epsilon, const SamplerConfig& cfg,
                                  Growth growth = Growth::kProof);

struct ThresholdRound {
  std::uint64_t edges = 0;
  std::uint64_t triangles = 0;
};

struct ThresholdResult {
  Rational estimate;
  std::vector<ThresholdRound> rounds;
};

/// (3 + epsilon) estimate: recount supports, record T_i / m_i, drop every
/// edge with support <= (3 + epsilon) T_i / m_i, until no edges remain.
/// Returns max_i T_i / m_i. Throws std::invalid_argument unless epsilon > 0.
ThresholdResult threshold_estimate(const Graph& g, double epsilon);

}  // namespace trusslab
