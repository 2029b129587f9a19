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
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "trusslab/gadgets.hpp"
#include "trusslab/triangles.hpp"

using namespace trusslab;

namespace {

std::vector<oracle::NodeTriple> as_triples(const std::vector<Triangle>& ts) {
  std::vector<oracle::NodeTriple> out;
  for (const auto& t : ts) out.push_back({t.nodes[0], t.nodes[1], t.nodes[2]});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("compute_supports examples") {
  SUBCASE("K3") {
    auto t = compute_supports(complete_graph(3));
    CHECK(t.support == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(t.triangle_count == 1);
  }
  SUBCASE("K33 is triangle-free") {
    auto t = compute_supports(fixtures::complete_bipartite(3, 3));
    CHECK(std::all_of(t.support.begin(), t.support.end(), [](auto s) { return s == 0; }));
    CHECK(t.triangle_count == 0);
  }
  SUBCASE("K44 plus apex") {
    const Graph g = fixtures::apex_example();
    CHECK(compute_supports(g).triangle_count == 16);
    CHECK(oracle::triangles(g).size() == 16);
  }
}

TEST_CASE("triangle counts") {
  CHECK(count_triangles(complete_graph(4)) == 4);
  CHECK(count_triangles(blowup(complete_graph(3), 2)) == 8);
  const Graph g = gen_random(10, 0.5, 3);
  CHECK(count_triangles(g) == oracle::triangles(g).size());
}

TEST_CASE("triangle_of_wedge") {
  const Graph k3 = complete_graph(3);
  auto t = triangle_of_wedge(k3, 0, 1, 2);
  REQUIRE(t);
  CHECK(t->nodes == std::array<NodeId, 3>{0, 1, 2});
  CHECK(t->edges == std::array<EdgeId, 3>{0, 1, 2});

  const Graph p = build_graph({{1, 0}, {0, 2}});
  CHECK_FALSE(triangle_of_wedge(p, 0, 1, 2));

  const Graph k4 = complete_graph(4);
  auto w = triangle_of_wedge(k4, 0, 1, 2);
  REQUIRE(w);
  const auto listed = collect_triangles(k4);
  CHECK(std::find(listed.begin(), listed.end(), *w) != listed.end());
}

TEST_CASE("listing matches brute force and is canonical") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Graph g = fixtures::random_small(seed, 3, 12);
    const auto listed = collect_triangles(g);
    CHECK(as_triples(listed) == oracle::triangles(g));

    std::set<std::array<NodeId, 3>> seen;
    const auto sup = compute_supports(g);
    for (const auto& t : listed) {
      CHECK(std::is_sorted(t.nodes.begin(), t.nodes.end()));
      CHECK(std::is_sorted(t.edges.begin(), t.edges.end()));
      CHECK(seen.insert(t.nodes).second);
      std::set<NodeId> ends;
      for (EdgeId e : t.edges) {
        CHECK(sup.support[e] >= 1);
        ends.insert(g.endpoints(e).u);
        ends.insert(g.endpoints(e).v);
      }
      CHECK(ends == std::set<NodeId>(t.nodes.begin(), t.nodes.end()));
    }

    CHECK(sup.support == oracle::supports(g));
    std::uint64_t total = 0;
    for (auto s : sup.support) total += s;
    CHECK(total == 3 * sup.triangle_count);
    CHECK(sup.triangle_count == listed.size());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (sup.support[e] == 0) continue;
      const Edge uv = g.endpoints(e);
      CHECK(sup.support[e] <= std::min(g.degree(uv.u), g.degree(uv.v)) - 1);
    }
  }
}
