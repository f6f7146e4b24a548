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

#include "brute.hpp"
#include "corpus.hpp"
#include "eulersafe/cut_nodes.hpp"
#include "eulersafe/error.hpp"
#include "eulersafe/generator.hpp"

namespace es = eulersafe;
using es::testing::make_graph;

namespace {

std::vector<es::NodeId> split_definition(const es::UGraph& u) {
  std::vector<es::NodeId> out;
  for (es::NodeId v = 0; v < u.node_count(); ++v) {
    if (es::component_split(u, v).count > 1) out.push_back(v);
  }
  return out;
}

es::UGraph undirected_path() { return es::UGraph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("underlying_undirected") {
  const es::UGraph tri = es::underlying_undirected(es::testing::triangle());
  CHECK(tri.node_count() == 3);
  CHECK(tri.edge_count() == 3);
  for (es::NodeId v = 0; v < 3; ++v) CHECK(tri.degree(v) == 2);

  const es::UGraph pair = es::underlying_undirected(make_graph({{"a", "b"}, {"b", "a"}}));
  REQUIRE(pair.edge_count() == 2);
  CHECK(pair.degree(0) == 2);
  CHECK(pair.incident(0)[0].other == 1);
  CHECK(pair.incident(0)[1].other == 1);

  const es::Graph eight = es::testing::figure_eight();
  const es::UGraph u = es::underlying_undirected(eight);
  CHECK(u.edge_count() == 6);
  CHECK(u.degree(*eight.find_node("v")) == 4);
  CHECK(u.degree(*eight.find_node("a")) == 2);
}

TEST_CASE("articulation_points: named examples") {
  CHECK(es::articulation_points(undirected_path()) == std::vector<es::NodeId>{1});
  CHECK(es::articulation_points(es::underlying_undirected(es::testing::triangle())).empty());

  const es::Graph eight = es::testing::figure_eight();
  const es::UGraph u = es::underlying_undirected(eight);
  CHECK(es::articulation_points(u) == std::vector<es::NodeId>{*eight.find_node("v")});
  CHECK(split_definition(u) == es::articulation_points(u));
}

TEST_CASE("articulation_points: doubled edges are not bridges") {
  // a = b - c with the a-b link doubled: b is still a cut node, a is not.
  const es::UGraph u(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(es::articulation_points(u) == std::vector<es::NodeId>{1});
  // A doubled pendant edge: two nodes, no cut node.
  CHECK(es::articulation_points(es::UGraph(2, {{0, 1}, {0, 1}})).empty());
  // Single node.
  CHECK(es::articulation_points(es::UGraph(1, {})).empty());
}

TEST_CASE("articulation_points: root with two children") {
  // Star centred on node 0 (the DFS root).
  const es::UGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(es::articulation_points(star) == std::vector<es::NodeId>{0});
  // Root on a cycle has a single DFS child.
  const es::UGraph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(es::articulation_points(cycle).empty());
}

TEST_CASE("articulation_points: disconnected input is a contract error") {
  CHECK_THROWS_AS(es::articulation_points(es::UGraph(4, {{0, 1}, {2, 3}})), es::ContractError);
}

TEST_CASE("component_split") {
  const es::Graph eight = es::testing::figure_eight();
  const es::UGraph u = es::underlying_undirected(eight);
  const es::ComponentSplit s = es::component_split(u, *eight.find_node("v"));
  CHECK(s.count == 2);
  const auto comp = [&](const char* label) { return s.component[*eight.find_node(label)]; };
  CHECK(comp("v") == es::kRemovedNode);
  CHECK(comp("a") == comp("b"));
  CHECK(comp("c") == comp("d"));
  CHECK(comp("a") != comp("c"));

  const es::Graph tri = es::testing::triangle();
  CHECK(es::component_split(es::underlying_undirected(tri), 0).count == 1);

  const es::ComponentSplit p = es::component_split(undirected_path(), 1);
  CHECK(p.count == 2);
  CHECK(p.component[0] != p.component[2]);
}

TEST_CASE("articulation_points equals the removal definition on the corpus") {
  for (const auto& entry : es::testing::standard_corpus()) {
    const es::Graph& g = entry.graph;
    if (g.node_count() > 9) continue;
    CAPTURE(entry.name);
    const es::UGraph u = es::underlying_undirected(g);
    const auto fast = es::articulation_points(u);
    CHECK(fast == split_definition(u));
    CHECK(fast == es::testing::brute_force_cut_nodes(g));
  }
}

TEST_CASE("articulation_points agrees with node deletion on larger random graphs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    es::GeneratorParams params{.nodes = 30, .cycles = 3 + seed % 8, .seed = seed, .max_cycle_length = 6,
                               .max_attempts = 1000};
    const es::Graph g = es::normalize(es::generate_eulerian(params)).graph;
    CAPTURE(seed);
    CHECK(es::articulation_points(es::underlying_undirected(g)) == es::testing::brute_force_cut_nodes(g));
  }
}

TEST_CASE("component_after_removal matches component_split") {
  for (const auto& entry : es::testing::standard_corpus()) {
    const es::Graph& g = entry.graph;
    CAPTURE(entry.name);
    const es::UGraph u = es::underlying_undirected(g);
    const es::CutAnalysis cuts = es::analyze_cut_nodes(u);
    for (es::NodeId v = 0; v < g.node_count(); ++v) {
      const es::ComponentSplit s = es::component_split(u, v);
      for (es::NodeId x = 0; x < g.node_count(); ++x) {
        if (x == v) continue;
        for (es::NodeId y = x + 1; y < g.node_count(); ++y) {
          if (y == v) continue;
          const bool same = s.component[x] == s.component[y];
          CHECK(same == (cuts.component_after_removal(v, x) == cuts.component_after_removal(v, y)));
        }
      }
    }
  }
}

TEST_CASE("degree-two cut nodes split into two sides with one in- and one out-neighbour each") {
  std::size_t seen = 0;
  for (const auto& entry : es::testing::standard_corpus()) {
    const es::Graph& g = entry.graph;
    CAPTURE(entry.name);
    const es::UGraph u = es::underlying_undirected(g);
    const es::CutAnalysis cuts = es::analyze_cut_nodes(u);
    for (es::NodeId v = 0; v < g.node_count(); ++v) {
      if (g.out_degree(v) != 2 || !cuts.is_cut_node(v)) continue;
      ++seen;
      const es::ComponentSplit s = es::component_split(u, v);
      REQUIRE(s.count == 2);
      for (std::uint32_t k = 0; k < 2; ++k) {
        const auto ins = std::count_if(g.in_edges(v).begin(), g.in_edges(v).end(),
                                       [&](es::EdgeId e) { return s.component[g.tail(e)] == k; });
        const auto outs = std::count_if(g.out_edges(v).begin(), g.out_edges(v).end(),
                                        [&](es::EdgeId e) { return s.component[g.head(e)] == k; });
        CHECK(ins == 1);
        CHECK(outs == 1);
      }
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("iterative DFS handles long paths without recursion") {
  const std::size_t n = 2'000'000;
  std::vector<std::pair<es::NodeId, es::NodeId>> edges;
  edges.reserve(n - 1);
  for (es::NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  const auto cuts = es::articulation_points(es::UGraph(n, std::move(edges)));
  CHECK(cuts.size() == n - 2);
}
