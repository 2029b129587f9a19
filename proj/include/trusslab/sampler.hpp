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

// Triangle-hypergraph sampling. The hypergraph has one vertex per graph edge
// and one hyperedge per triangle; a sample keeps each hyperedge independently
// with probability p. Triangles are reached through forward wedges (center
// earlier in the degeneracy order than both endpoints), each of which is kept
// with probability p by jumping over geometrically distributed gaps, so the
// cost is proportional to the number of wedges kept rather than to W.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "trusslab/degeneracy.hpp"
#include "trusslab/graph.hpp"
#include "trusslab/triangles.hpp"

namespace trusslab {

using Rng = std::mt19937_64;

/// Seeds a generator through splitmix64 so nearby seeds give unrelated streams.
Rng make_rng(std::uint64_t seed);

/// Deterministic child seed for independent substreams.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// Geometric(p) variate on {1, 2, ...}: ceil(ln U / ln(1 - p)), U ~ (0, 1].
/// Saturates at UINT64_MAX for vanishing p.
std::uint64_t geometric_skip(double p, Rng& rng);

using Hyperedge = std::array<EdgeId, 3>;

struct HypergraphSample {
  std::size_t vertex_count = 0;  // graph edge count
  std::vector<Hyperedge> hyperedges;
  double realized_p = 0.0;
  bool fell_back_to_exact = false;
  std::uint64_t rng_seed = 0;
  std::size_t doublings = 0;
  double stop_size = 0.0;  // (3/2) zeta m ln m / eps^2
};

struct SamplerConfig {
  static constexpr double kStopThresholdFactor = 1.5;

  double epsilon = 0.1;
  double zeta = 110.0;
  std::uint64_t seed = 0;

  /// epsilon clamped from below by 1/n.
  double effective_epsilon(std::size_t node_count) const {
    return node_count == 0 ? epsilon : std::max(epsilon, 1.0 / static_cast<double>(node_count));
  }
};

namespace detail {

/// One pass over the canonical forward-wedge sequence keeping each wedge with
/// probability p. Centers are taken by position in the order; the pairs of a
/// center's forward neighbors (sorted by position) in lexicographic order.
template <GraphView G>
void sample_forward_wedges(const G& g, const DegeneracyInfo& d,
                           const std::vector<std::vector<NodeId>>& fwd, std::uint64_t wedges,
                           double p, Rng& rng, std::vector<Hyperedge>& out) {
  std::size_t center_pos = 0;
  std::uint64_t center_base = 0;  // wedges before the current center
  std::size_t row = 0;
  std::uint64_t row_base = 0;  // wedges before the current row, within center

  std::uint64_t index = 0;  // 1-based index of the last kept wedge
  for (;;) {
    const std::uint64_t skip = geometric_skip(p, rng);
    if (skip > wedges - index) break;
    index += skip;
    const std::uint64_t target = index - 1;

    for (;;) {
      const std::uint64_t f = fwd[d.order[center_pos]].size();
      const std::uint64_t here = f < 2 ? 0 : f * (f - 1) / 2;
      if (target < center_base + here) break;
      center_base += here;
      ++center_pos;
      row = 0;
      row_base = 0;
    }
    const auto& nbrs = fwd[d.order[center_pos]];
    const std::uint64_t local = target - center_base;
    while (local >= row_base + (nbrs.size() - 1 - row)) {
      row_base += nbrs.size() - 1 - row;
      ++row;
    }
    const std::size_t col = row + 1 + static_cast<std::size_t>(local - row_base);
    if (auto t = triangle_of_wedge(g, d.order[center_pos], nbrs[row], nbrs[col])) {
      out.push_back(t->edges);
    }
  }
}

template <GraphView G>
std::vector<Hyperedge> all_hyperedges(const G& g, const DegeneracyInfo& d) {
  std::vector<Hyperedge> out;
  list_triangles(g, d, [&](const Triangle& t) { out.push_back(t.edges); });
  return out;
}

}  // namespace detail

/// A single pass at fixed p with no doubling. Throws std::invalid_argument
/// unless 0 < p <= 1.
template <GraphView G>
HypergraphSample sample_wedges_fixed_p(const G& g, const DegeneracyInfo& d, double p,
                                       std::uint64_t seed) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("sampling probability must be in (0, 1]");
  HypergraphSample s;
  s.vertex_count = g.edge_count();
  s.realized_p = p;
  s.rng_seed = seed;
  Rng rng = make_rng(seed);
  detail::sample_forward_wedges(g, d, forward_adjacency(g, d), forward_wedge_count(d), p, rng,
                                s.hyperedges);
  return s;
}

/// Samples with p = zeta m ln m / (W eps^2), doubling p and resampling from
/// scratch until at least (3/2) zeta m ln m / eps^2 hyperedges are kept. Once
/// p reaches 1 the full hypergraph is returned instead. Throws
/// std::invalid_argument unless zeta > 0 and epsilon > 0.
template <GraphView G>
HypergraphSample sample_hypergraph(const G& g, const DegeneracyInfo& d, const SamplerConfig& cfg) {
  if (!(cfg.zeta > 0.0) || !(cfg.epsilon > 0.0)) {
    throw std::invalid_argument("sampler needs zeta > 0 and epsilon > 0");
  }
  HypergraphSample s;
  s.vertex_count = g.edge_count();
  s.rng_seed = cfg.seed;
  const std::uint64_t wedges = forward_wedge_count(d);
  if (wedges == 0) {
    s.realized_p = 1.0;
    s.fell_back_to_exact = true;
    return s;
  }

  const double m = static_cast<double>(g.edge_count());
  const double eps = cfg.effective_epsilon(g.node_count());
  const double scale = cfg.zeta * m * std::log(m) / (eps * eps);
  s.stop_size = SamplerConfig::kStopThresholdFactor * scale;
  double p = scale / static_cast<double>(wedges);

  std::vector<std::vector<NodeId>> fwd;
  Rng rng = make_rng(cfg.seed);
  for (;;) {
    if (p >= 1.0) {
      s.realized_p = 1.0;
      s.fell_back_to_exact = true;
      s.hyperedges = detail::all_hyperedges(g, d);
      return s;
    }
    if (fwd.empty()) fwd = forward_adjacency(g, d);
    s.hyperedges.clear();
    detail::sample_forward_wedges(g, d, fwd, wedges, p, rng, s.hyperedges);
    if (static_cast<double>(s.hyperedges.size()) >= s.stop_size) {
      s.realized_p = p;
      return s;
    }
    p *= 2.0;
    ++s.doublings;
  }
}

}  // namespace trusslab
