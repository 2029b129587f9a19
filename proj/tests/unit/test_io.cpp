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
#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "trusslab/degeneracy.hpp"
#include "trusslab/edge_list_io.hpp"
#include "trusslab/exact_truss.hpp"
#include "trusslab/gadgets.hpp"
#include "trusslab/random_graph.hpp"

using namespace trusslab;

TEST_CASE("edge list parsing") {
  std::istringstream in("# header\n\n0 1\n  1 2   \n2 0 # spurious\n3\t4 # note\n1 0\n");
  const LabeledGraph g = read_edge_list(in);
  CHECK(g.graph.node_count() == 5);
  CHECK(g.graph.edge_count() == 4);
  CHECK(g.spurious == std::vector<bool>{false, false, true, false});
}

TEST_CASE("edge list errors carry the line number") {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_edge_list(in);
    } catch (const EdgeListError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("0 1\n1 x\n") == 2);
  CHECK(line_of("0 1\n\n# c\n-1 2\n") == 4);
  CHECK(line_of("0\n") == 1);
  CHECK(line_of("0 1 2\n") == 1);
  CHECK(line_of("0 1x\n") == 1);
  CHECK(line_of("0 99999999999\n") == 1);
  CHECK(line_of("0 1\n2 3\n") == 0);
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), std::runtime_error);
}

TEST_CASE("round trip preserves ids, labels and derived quantities") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = fixtures::random_small(seed, 3, 12);
    const std::size_t x = std::min<std::size_t>(1 + seed % 2, spurious_clique_cap(g.edge_count()));
    const AugmentedGraph a = add_spurious_cliques(g, x);
    std::stringstream buf;
    write_edge_list(buf, a.graph, a.spurious);
    const LabeledGraph back = read_edge_list(buf);
    CHECK(back.spurious == a.spurious);
    REQUIRE(back.graph.edge_count() == a.graph.edge_count());
    for (EdgeId e = 0; e < a.graph.edge_count(); ++e) {
      CHECK(back.graph.endpoints(e) == a.graph.endpoints(e));
    }
    CHECK(trussness(back.graph) == trussness(a.graph));
    CHECK(count_triangles(back.graph) == count_triangles(a.graph));
    CHECK(degeneracy_order(back.graph).degeneracy == degeneracy_order(a.graph).degeneracy);
  }
}

TEST_CASE("gen_random") {
  CHECK(gen_random(20, 0.0, 1).edge_count() == 0);
  CHECK(gen_random(20, 0.0, 1).node_count() == 20);
  CHECK(gen_random(12, 1.0, 1).edge_count() == 66);
  CHECK(gen_random(0, 0.5, 1).edge_count() == 0);
  CHECK(gen_random(1, 1.0, 1).edge_count() == 0);
  CHECK_THROWS_AS(gen_random(5, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random(5, -0.1, 1), std::invalid_argument);

  const Graph a = gen_random(30, 0.3, 42), b = gen_random(30, 0.3, 42);
  CHECK(std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end()));

  // Binomial(1225, 0.2): mean 245, sigma = sqrt(1225 * 0.2 * 0.8) = 14.
  const double sigma = std::sqrt(1225 * 0.2 * 0.8);
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto m = static_cast<double>(gen_random(50, 0.2, seed).edge_count());
    CHECK(std::abs(m - 245.0) <= 4 * sigma);
    total += m;
  }
  CHECK(std::abs(total / 100 - 245.0) <= 4 * sigma / 10);
}
