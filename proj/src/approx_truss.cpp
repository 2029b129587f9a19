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

#include "trusslab/approx_truss.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "trusslab/bucket_queue.hpp"
#include "trusslab/gadgets.hpp"
#include "trusslab/triangles.hpp"

namespace trusslab {

namespace {

// Floor and ceiling of a non-negative rational.
std::int64_t floor_of(const Rational& r) { return r.numerator() / r.denominator(); }
std::int64_t ceil_of(const Rational& r) {
  return (r.numerator() + r.denominator() - 1) / r.denominator();
}

}  // namespace

ApproxTrussOrder hypergraph_degeneracy_order(HypergraphSample sample) {
  const std::size_t n = sample.vertex_count;
  const auto& hyper = sample.hyperedges;

  if (hyper.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw std::length_error("too many hyperedges");
  }
  std::vector<std::size_t> offsets(n + 1, 0);
  for (const auto& h : hyper) {
    for (EdgeId v : h) ++offsets[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<std::uint32_t> incidence(offsets.back());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (std::size_t h = 0; h < hyper.size(); ++h) {
    for (EdgeId v : hyper[h]) incidence[fill[v]++] = static_cast<std::uint32_t>(h);
  }

  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = offsets[v + 1] - offsets[v];

  ApproxTrussOrder out;
  out.order.reserve(n);
  out.sampled_forward_degree.reserve(n);
  BucketQueue queue(std::move(degree));
  std::vector<char> dead(hyper.size(), 0);
  while (!queue.empty()) {
    auto [v, d] = queue.pop_min();
    out.order.push_back(static_cast<EdgeId>(v));
    out.sampled_forward_degree.push_back(static_cast<std::uint32_t>(d));
    for (std::size_t i = offsets[v]; i < offsets[v + 1]; ++i) {
      const std::uint32_t h = incidence[i];
      if (dead[h]) continue;
      dead[h] = 1;
      for (EdgeId w : hyper[h]) {
        if (w != v) queue.decrement(w);
      }
    }
  }
  out.sample = std::move(sample);
  return out;
}

bool marker_test(std::span<const EdgeId> order, const std::vector<bool>& spurious) {
  if (order.size() != spurious.size()) {
    throw std::invalid_argument("edge labels do not cover the order");
  }
  std::size_t first_spurious = order.size();
  std::size_t last_original = 0;
  bool any_original = false;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= spurious.size()) throw std::invalid_argument("edge id outside label range");
    if (spurious[order[i]]) {
      first_spurious = std::min(first_spurious, i);
    } else {
      last_original = i;
      any_original = true;
    }
  }
  return any_original && first_spurious < last_original;
}

EstimateResult estimate_trussness(const Graph& g_in, double epsilon, const SamplerConfig& cfg,
                                  Growth growth) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0, 1)");
  const Rational eps = rational_from_double(epsilon);
  const Rational eps_prime = eps / 6;
  const Rational factor = Rational(1) + (growth == Growth::kProof ? eps_prime : eps);

  const Graph g = disjoint_union(materialize(blowup(g_in, 6)), complete_graph(3));
  const std::size_t x_cap = std::min(2 * degeneracy_order(g).degeneracy + 2,
                                     spurious_clique_cap(g.edge_count()));

  EstimateResult res;
  std::int64_t x = 1;
  std::int64_t tilde = 1;
  for (std::uint64_t round = 0;; ++round) {
    const AugmentedGraph aug = add_spurious_cliques(g, static_cast<std::size_t>(x));
    SamplerConfig round_cfg = cfg;
    round_cfg.epsilon = to_double(eps_prime);
    round_cfg.seed = substream_seed(cfg.seed, round);
    const ApproxTrussOrder ord = approx_truss_order(aug.graph, round_cfg);
    const bool hit = marker_test(ord.order, aug.spurious);
    res.trace.push_back({static_cast<std::size_t>(x), hit, ord.sample.realized_p,
                         ord.sample.fell_back_to_exact, ord.sample.hyperedges.size()});
    if (!hit) break;
    tilde = x;
    const std::int64_t next = ceil_of(factor * x);
    if (next > static_cast<std::int64_t>(x_cap)) {
      res.hit_x_cap = true;
      break;
    }
    x = next;
  }
  res.iterations = res.trace.size();
  res.last_marked_x = static_cast<std::size_t>(tilde);

  if (tilde < 2) {
    res.estimate = 0;
    res.exact_flag = true;
    return res;
  }
  // Multiples of 6 inside [tilde / (1 + eps'), (tilde + 1)(1 + 3 eps')].
  const Rational lo = Rational(tilde) / (Rational(1) + eps_prime);
  const Rational hi = Rational(tilde + 1) * (Rational(1) + 3 * eps_prime);
  const std::int64_t first = ceil_of(lo / 6);
  const std::int64_t last = floor_of(hi / 6);
  if (last == first) {
    res.estimate = first;
    res.exact_flag = true;
  } else {
    res.estimate = Rational(tilde, 6);
  }
  return res;
}

ThresholdResult threshold_estimate(const Graph& g, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const Rational c = Rational(3) + rational_from_double(epsilon);
  using Wide = __int128;

  ThresholdResult res;
  res.estimate = 0;
  std::vector<Edge> current(g.edges().begin(), g.edges().end());
  while (!current.empty()) {
    const Graph h = Graph::from_edges(current, g.node_count());
    const SupportTable table = compute_supports(h);
    const std::uint64_t m = h.edge_count();
    const std::uint64_t t = table.triangle_count;
    res.rounds.push_back({m, t});
    res.estimate = std::max(res.estimate, Rational(static_cast<std::int64_t>(t),
                                                   static_cast<std::int64_t>(m)));
    // Keep e iff sup(e) > c T / m, i.e. sup(e) m den(c) > num(c) T.
    std::vector<Edge> kept;
    for (EdgeId e = 0; e < m; ++e) {
      const Wide lhs = Wide(table.support[e]) * m * c.denominator();
      const Wide rhs = Wide(c.numerator()) * t;
      if (lhs > rhs) kept.push_back(h.endpoints(e));
    }
    current = std::move(kept);
  }
  return res;
}

}  // namespace trusslab
