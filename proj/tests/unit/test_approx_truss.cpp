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

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "trusslab/approx_truss.hpp"
#include "trusslab/exact_truss.hpp"
#include "trusslab/gadgets.hpp"

using namespace trusslab;

namespace {

SamplerConfig exact_cfg(std::uint64_t seed = 0) {
  SamplerConfig cfg;
  cfg.zeta = 1e12;  // forces the full hypergraph
  cfg.seed = seed;
  return cfg;
}

HypergraphSample full_sample(const Graph& g) {
  HypergraphSample s;
  s.vertex_count = g.edge_count();
  for (const auto& t : collect_triangles(g)) s.hyperedges.push_back(t.edges);
  return s;
}

std::uint32_t max_forward(const ApproxTrussOrder& o) {
  std::uint32_t best = 0;
  for (auto f : o.sampled_forward_degree) best = std::max(best, f);
  return best;
}

}  // namespace

TEST_CASE("hypergraph_degeneracy_order examples") {
  const Graph k4 = complete_graph(4);
  CHECK(max_forward(hypergraph_degeneracy_order(full_sample(k4))) == 2);

  HypergraphSample empty;
  empty.vertex_count = 5;
  const auto o = hypergraph_degeneracy_order(empty);
  CHECK(o.order == std::vector<EdgeId>{0, 1, 2, 3, 4});
  CHECK(o.sampled_forward_degree == std::vector<std::uint32_t>(5, 0));

  const Graph left = fixtures::clique_tail();
  CHECK(max_forward(hypergraph_degeneracy_order(full_sample(left))) == 2);
}

TEST_CASE("full hypergraph degeneracy equals trussness") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = fixtures::random_small(seed, 3, 10);
    const auto o = hypergraph_degeneracy_order(full_sample(g));
    CHECK(max_forward(o) == trussness(g));
    CHECK(is_exact_truss_order(g, o.order));
    // The order is a permutation.
    auto sorted = o.order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<EdgeId> ids(g.edge_count());
    std::iota(ids.begin(), ids.end(), 0);
    CHECK(sorted == ids);
  }
}

TEST_CASE("approx_truss_order") {
  SUBCASE("fallback gives an exact truss order") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Graph g = fixtures::random_small(seed, 4, 12);
      const auto o = approx_truss_order(g, exact_cfg(seed));
      CHECK(o.sample.fell_back_to_exact);
      CHECK(is_exact_truss_order(g, o.order));
    }
  }
  SUBCASE("triangle-free graph") {
    const Graph g = fixtures::complete_bipartite(3, 4);
    SamplerConfig cfg;
    cfg.zeta = 0.01;
    const auto o = approx_truss_order(g, cfg);
    CHECK(o.order.size() == g.edge_count());
    const auto r = replay_order(g, o.order);
    CHECK(std::all_of(r.forward_support.begin(), r.forward_support.end(),
                      [](auto s) { return s == 0; }));
  }
  SUBCASE("order is the peeling of its own sample") {
    const Graph g = materialize(blowup(complete_graph(5), 2));
    SamplerConfig cfg;
    cfg.epsilon = 0.5;
    cfg.zeta = 0.05;
    cfg.seed = 3;
    const auto o = approx_truss_order(g, cfg);
    CHECK_FALSE(o.sample.fell_back_to_exact);
    CHECK(hypergraph_degeneracy_order(o.sample).order == o.order);
    CHECK(o.certified_epsilon == doctest::Approx(0.5));
  }
}

// K5 x 2 has only 90 forward wedges, so the sampler stays below p = 1 only for
// zeta < 0.08, where samples hold about half the triangles. The bound is kept
// as stated and reported; it does not hold at this size.
TEST_CASE("sampled orders are approximate truss orders on most seeds" * doctest::may_fail()) {
  const Graph g = materialize(blowup(complete_graph(5), 2));
  int violated = 0, sampled = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SamplerConfig cfg;
    cfg.epsilon = 0.5;
    cfg.zeta = 0.03;
    cfg.seed = seed;
    const auto o = approx_truss_order(g, cfg);
    sampled += !o.sample.fell_back_to_exact;
    violated += oracle::approx_order_violations(g, o.order, 0.5) > 0;
  }
  CHECK(sampled == 100);
  CHECK(violated <= 5);
  MESSAGE("seeds with a violated position: " << violated);
}

TEST_CASE("marker_test") {
  CHECK_FALSE(marker_test(std::vector<EdgeId>{0, 1, 2, 3}, {false, false, true, true}));
  CHECK(marker_test(std::vector<EdgeId>{2, 0, 1, 3}, {false, false, true, true}));
  CHECK_FALSE(marker_test(std::vector<EdgeId>{0, 1}, {true, true}));
  CHECK_THROWS_AS(marker_test(std::vector<EdgeId>{0, 1}, {true}), std::invalid_argument);

  // K6 has trussness 4; spurious triangles (x = 1) peel before the K6 edges.
  const AugmentedGraph a = add_spurious_cliques(complete_graph(6), 1);
  CHECK(marker_test(peeling_truss_order(a.graph), a.spurious));
  // x above trussness: the original edges all go first.
  const AugmentedGraph b = add_spurious_cliques(complete_graph(6), 6);
  CHECK_FALSE(marker_test(peeling_truss_order(b.graph), b.spurious));
}

TEST_CASE("estimate_trussness with exact orders") {
  SUBCASE("triangle-free") {
    const auto r = estimate_trussness(fixtures::path(5), 0.5, exact_cfg());
    CHECK(r.estimate == Rational(0));
    CHECK(r.exact_flag);
  }
  SUBCASE("K3") {
    const auto r = estimate_trussness(complete_graph(3), 0.5, exact_cfg());
    CHECK(r.estimate == Rational(1));
    CHECK(r.exact_flag);
  }
  SUBCASE("two-truss example") {
    const auto r = estimate_trussness(fixtures::clique_tail(), 0.5, exact_cfg());
    CHECK(r.estimate == Rational(2));
    CHECK(r.exact_flag);
    for (const auto& round : r.trace) CHECK(round.fell_back_to_exact);
  }
  SUBCASE("every round's verdict matches the marker rule") {
    const Graph g = complete_graph(6);
    const auto r = estimate_trussness(g, 0.3, exact_cfg());
    const std::size_t t6 = 6 * trussness(g);
    for (const auto& round : r.trace) {
      if (round.x < t6) CHECK(round.spurious_first);
      if (round.x > t6) CHECK_FALSE(round.spurious_first);
    }
  }
  CHECK_THROWS_AS(estimate_trussness(complete_graph(3), 0.0, exact_cfg()), std::invalid_argument);
  CHECK_THROWS_AS(estimate_trussness(complete_graph(3), 1.0, exact_cfg()), std::invalid_argument);
}

TEST_CASE("estimate_trussness upper bound with exact orders") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = fixtures::random_small(seed, 4, 8);
    const auto t = trussness(g);
    for (double eps : {0.3, 0.9}) {
      const auto r = estimate_trussness(g, eps, exact_cfg(seed));
      const Rational eps_prime = rational_from_double(eps) / 6;
      CHECK(r.estimate <= (Rational(1) + eps_prime) * Rational(t));
      const Rational diff = r.estimate > Rational(t) ? r.estimate - Rational(t) : Rational(t) - r.estimate;
      CHECK(diff <= rational_from_double(eps) * Rational(t));
    }
  }
}

TEST_CASE("pseudocode growth visits fewer clique sizes") {
  const Graph g = complete_graph(5);
  const auto proof = estimate_trussness(g, 0.5, exact_cfg());
  const auto fast = estimate_trussness(g, 0.5, exact_cfg(), Growth::kPseudocode);
  CHECK(fast.iterations < proof.iterations);
}

TEST_CASE("threshold_estimate") {
  CHECK(threshold_estimate(fixtures::path(6), 0.1).estimate == Rational(0));
  CHECK(threshold_estimate(Graph{}, 0.1).estimate == Rational(0));

  const auto k5 = threshold_estimate(complete_graph(5), 0.1);
  CHECK(k5.rounds.front().edges == 10);
  CHECK(k5.rounds.front().triangles == 10);
  CHECK(k5.estimate <= Rational(3));
  CHECK(Rational(3) <= Rational(31, 10) * k5.estimate);

  const auto right = threshold_estimate(fixtures::apex_example(), 0.1);
  CHECK(right.rounds.front().edges == 24);
  CHECK(right.rounds.front().triangles == 16);
  CHECK(right.estimate <= Rational(1));
  CHECK(Rational(1) <= Rational(31, 10) * right.estimate);

  CHECK_THROWS_AS(threshold_estimate(complete_graph(3), 0.0), std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = fixtures::random_small(seed, 4, 14);
    const Rational t(trussness(g));
    const auto r = threshold_estimate(g, 0.1);
    CHECK(r.estimate <= t);
    CHECK(t <= Rational(31, 10) * r.estimate);
    for (std::size_t i = 0; i + 1 < r.rounds.size(); ++i) {
      CHECK(Rational(static_cast<std::int64_t>(r.rounds[i + 1].edges)) * Rational(31, 10) <=
            Rational(static_cast<std::int64_t>(r.rounds[i].edges)) * 3);
    }
  }
}
