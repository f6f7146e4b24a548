// Copyright 2026 The eulersafe Authors
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

#include "corpus.hpp"
#include "eulersafe/circuit.hpp"
#include "eulersafe/error.hpp"
#include "eulersafe/generator.hpp"
#include "eulersafe/oracles.hpp"

namespace es = eulersafe;
using es::testing::make_graph;

namespace {

std::set<std::vector<es::EdgeId>> rotation_classes(const es::Graph& g) {
  std::set<std::vector<es::EdgeId>> out;
  for (const es::Circuit& c : es::enumerate_eulerian_circuits(g, 1000).circuits) {
    const es::Circuit canon = c.canonical();
    out.emplace(canon.edges().begin(), canon.edges().end());
  }
  return out;
}

std::vector<es::EdgeId> as_vector(const es::Circuit& c) { return {c.edges().begin(), c.edges().end()}; }

es::NodeId node(const es::Graph& g, std::string_view label) { return *g.find_node(label); }

}  // namespace

TEST_CASE("find_eulerian_circuit: triangle") {
  const es::Graph g = es::testing::triangle();
  const es::Circuit c = es::find_eulerian_circuit(g);
  CHECK(as_vector(c) == std::vector<es::EdgeId>{0, 1, 2});
  const auto nodes = c.nodes(g);
  CHECK(g.label(nodes.front()) == "a");
  CHECK(g.label(nodes.back()) == "a");
}

TEST_CASE("find_eulerian_circuit: figure-eight has one rotation class") {
  const es::Graph g = es::testing::figure_eight();
  const es::Circuit c = es::find_eulerian_circuit(g);
  CHECK(es::verify_circuit(g, c));
  CHECK(c.length() == 6);
  const auto nodes = c.nodes(g);
  CHECK(std::count(nodes.begin(), nodes.end() - 1, node(g, "v")) == 2);
  const auto classes = rotation_classes(g);
  CHECK(classes.size() == 1);
  CHECK(classes.count(as_vector(c.canonical())) == 1);
}

TEST_CASE("find_eulerian_circuit: bidirected triangle lands in one of three classes") {
  const es::Graph g = es::testing::bidirected_triangle();
  const es::Circuit c = es::find_eulerian_circuit(g);
  CHECK(es::verify_circuit(g, c));
  const auto classes = rotation_classes(g);
  CHECK(classes.size() == 3);
  CHECK(classes.count(as_vector(c.canonical())) == 1);
}

TEST_CASE("find_eulerian_circuit: contract errors") {
  CHECK_THROWS_WITH_AS(es::find_eulerian_circuit(es::testing::path3()),
                       doctest::Contains("unbalanced node a"), es::ContractError);
  CHECK_THROWS_WITH_AS(es::find_eulerian_circuit(es::testing::two_triangles()),
                       doctest::Contains("not weakly connected"), es::ContractError);
  CHECK_THROWS_AS(es::find_eulerian_circuit(make_graph({{"a", "b"}, {"b", "a"}, {"a", "b"}, {"b", "a"}})),
                  es::ContractError);
  // The multigraph entry point accepts the same input.
  const es::Graph multi = make_graph({{"a", "b"}, {"b", "a"}, {"a", "b"}, {"b", "a"}, {"a", "a"}});
  CHECK(es::verify_circuit(multi, es::find_eulerian_circuit_multigraph(multi)));
}

TEST_CASE("verify_circuit") {
  const es::Graph g = es::testing::triangle();
  CHECK(es::verify_circuit(g, es::Circuit(std::vector<es::EdgeId>{0, 1, 2})));
  CHECK(es::verify_circuit(g, es::Circuit(std::vector<es::EdgeId>{1, 2, 0})));
  CHECK_FALSE(es::verify_circuit(g, es::Circuit(std::vector<es::EdgeId>{0, 1})));
  CHECK_FALSE(es::verify_circuit(g, es::Circuit(std::vector<es::EdgeId>{0, 1, 2, 0})));
  CHECK_FALSE(es::verify_circuit(g, es::Circuit(std::vector<es::EdgeId>{0, 0, 0})));
  CHECK_FALSE(es::verify_circuit(g, es::Circuit(std::vector<es::EdgeId>{0, 2, 1})));
  CHECK_FALSE(es::verify_circuit(g, es::Circuit(std::vector<es::EdgeId>{0, 1, 7})));
  CHECK_FALSE(es::verify_circuit(g, es::Circuit{}));

  // Closed but not covering: the first triangle of the figure-eight.
  CHECK_FALSE(es::verify_circuit(es::testing::figure_eight(), es::Circuit(std::vector<es::EdgeId>{0, 1, 2})));
}

TEST_CASE("swap_at_node: three triangles, maps one circuit onto the other") {
  const es::Graph g = es::testing::three_triangles();
  const es::NodeId v = node(g, "v");
  const es::Circuit c = es::find_eulerian_circuit(g);
  const es::Circuit swapped = es::swap_at_node(g, c, v, 1);
  CHECK(es::verify_circuit(g, swapped));

  const auto classes = rotation_classes(g);
  REQUIRE(classes.size() == 2);
  CHECK(classes.count(as_vector(swapped.canonical())) == 1);
  CHECK(swapped.canonical() != c.canonical());

  // The edge entering the middle visit of v now leaves through another edge.
  const auto visits = es::occurrences(g, c, v);
  const es::EdgeId entering = c[visits[1] - 1];
  const auto pos = std::find(swapped.edges().begin(), swapped.edges().end(), entering) - swapped.edges().begin();
  CHECK(swapped[(static_cast<std::size_t>(pos) + 1) % swapped.length()] != c[visits[1]]);
}

TEST_CASE("swap_at_node: involution") {
  const es::Graph g = es::testing::three_triangles();
  const es::Circuit c = es::find_eulerian_circuit(g);
  const es::Circuit once = es::swap_at_node(g, c, node(g, "v"), 1);
  CHECK(es::swap_at_node(g, once, node(g, "v"), 1) == c);
}

TEST_CASE("swap_at_node: precondition") {
  const es::Graph g = es::testing::figure_eight();
  const es::Circuit c = es::find_eulerian_circuit(g);
  CHECK_THROWS_AS(es::swap_at_node(g, c, node(g, "v"), 1), es::ContractError);

  const es::Graph t = es::testing::three_triangles();
  const es::Circuit tc = es::find_eulerian_circuit(t);
  CHECK_THROWS_AS(es::swap_at_node(t, tc, node(t, "v"), 0), es::ContractError);
  CHECK_THROWS_AS(es::swap_at_node(t, tc, node(t, "v"), 2), es::ContractError);
}

TEST_CASE("properties over the corpus: circuits verify, swaps verify, traversal is linear") {
  for (const auto& entry : es::testing::standard_corpus()) {
    CAPTURE(entry.name);
    const es::Graph& g = entry.graph;
    es::CircuitStats stats;
    const es::Circuit c = es::find_eulerian_circuit(g, {.shuffle_seed = std::nullopt, .stats = &stats});
    CHECK(es::verify_circuit(g, c));
    CHECK(c[0] == 0);
    CHECK(stats.edge_visits == 2 * g.edge_count());

    const es::Circuit shuffled = es::find_eulerian_circuit(g, {.shuffle_seed = 7, .stats = nullptr});
    CHECK(es::verify_circuit(g, shuffled));

    for (es::NodeId v = 0; v < g.node_count(); ++v) {
      const auto visits = es::occurrences(g, c, v);
      CHECK(visits.size() == g.out_degree(v));
      for (std::size_t occ = 1; occ + 1 < visits.size(); ++occ) {
        const es::Circuit s = es::swap_at_node(g, c, v, occ);
        CHECK(es::verify_circuit(g, s));
        CHECK(es::swap_at_node(g, s, v, occ) == c);
      }
    }
  }
}

TEST_CASE("edge visits stay at 2|E| on large generated graphs") {
  es::GeneratorParams params{.nodes = 5000, .cycles = 40, .seed = 3, .max_cycle_length = 0, .max_attempts = 1000};
  const es::Graph g = es::normalize(es::generate_eulerian(params)).graph;
  es::CircuitStats stats;
  const es::Circuit c = es::find_eulerian_circuit(g, {.shuffle_seed = std::nullopt, .stats = &stats});
  CHECK(es::verify_circuit(g, c));
  CHECK(stats.edge_visits <= 2 * g.edge_count());
}
