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

#include "corpus.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "eulersafe/generator.hpp"
#include "eulersafe/random.hpp"

namespace eulersafe::testing {

Graph make_graph(const std::vector<std::pair<std::string, std::string>>& edges) {
  Graph::Builder b;
  for (const auto& [t, h] : edges) b.add_edge(t, h);
  return std::move(b).build();
}

Graph triangle() { return make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}}); }

Graph figure_eight() {
  return make_graph({{"v", "a"}, {"a", "b"}, {"b", "v"}, {"v", "c"}, {"c", "d"}, {"d", "v"}});
}

Graph bidirected_triangle() {
  return make_graph({{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}, {"a", "c"}, {"c", "a"}});
}

Graph three_triangles() {
  return make_graph({{"v", "a1"},
                     {"a1", "a2"},
                     {"a2", "v"},
                     {"v", "b1"},
                     {"b1", "b2"},
                     {"b2", "v"},
                     {"v", "c1"},
                     {"c1", "c2"},
                     {"c2", "v"}});
}

Graph path3() { return make_graph({{"a", "b"}, {"b", "c"}}); }

Graph two_triangles() {
  return make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"x", "y"}, {"y", "z"}, {"z", "x"}});
}

namespace {

struct ArcTable {
  explicit ArcTable(std::size_t n) : n(n) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) arcs.emplace_back(i, j);
      }
    }
    index.assign(n * n, 0);
    for (std::size_t k = 0; k < arcs.size(); ++k) index[arcs[k].first * n + arcs[k].second] = k;
  }

  std::size_t n;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  std::vector<std::size_t> index;
};

bool balanced_and_connected(const ArcTable& table, std::uint32_t mask) {
  std::array<int, 8> balance{};
  std::array<std::size_t, 8> parent{};
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::uint32_t touched = 0;
  for (std::size_t k = 0; k < table.arcs.size(); ++k) {
    if (!(mask >> k & 1U)) continue;
    const auto [i, j] = table.arcs[k];
    ++balance[i];
    --balance[j];
    touched |= 1U << i | 1U << j;
    parent[find(i)] = find(j);
  }
  std::size_t roots = 0;
  for (std::size_t v = 0; v < table.n; ++v) {
    if (balance[v] != 0) return false;
    if ((touched >> v & 1U) && find(v) == v) ++roots;
  }
  return roots == 1;
}

std::uint32_t permute(const ArcTable& table, std::uint32_t mask, const std::vector<std::size_t>& perm) {
  std::uint32_t out = 0;
  for (std::size_t k = 0; k < table.arcs.size(); ++k) {
    if (!(mask >> k & 1U)) continue;
    const auto [i, j] = table.arcs[k];
    out |= 1U << table.index[perm[i] * table.n + perm[j]];
  }
  return out;
}

}  // namespace

std::vector<CorpusEntry> exhaustive_corpus(std::size_t max_nodes, bool up_to_isomorphism) {
  const ArcTable table(max_nodes);
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(max_nodes);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::set<std::uint32_t> classes;
  const std::uint32_t limit = 1U << table.arcs.size();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    if (!balanced_and_connected(table, mask)) continue;
    if (!up_to_isomorphism) {
      classes.insert(mask);
      continue;
    }
    std::uint32_t canon = mask;
    for (const auto& perm : perms) canon = std::min(canon, permute(table, mask, perm));
    classes.insert(canon);
  }

  std::vector<CorpusEntry> out;
  out.reserve(classes.size());
  for (std::uint32_t mask : classes) {
    Graph::Builder b;
    for (std::size_t k = 0; k < table.arcs.size(); ++k) {
      if (mask >> k & 1U) {
        b.add_edge("n" + std::to_string(table.arcs[k].first), "n" + std::to_string(table.arcs[k].second));
      }
    }
    out.push_back({"exhaustive#" + std::to_string(mask), std::move(b).build()});
  }
  return out;
}

std::vector<CorpusEntry> random_corpus(std::size_t count, std::size_t max_edges, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<CorpusEntry> out;
  while (out.size() < count) {
    GeneratorParams params;
    params.nodes = rng.between(2, 8);
    params.cycles = rng.between(1, 4);
    params.max_cycle_length = rng.between(2, params.nodes);
    params.seed = rng();
    Graph g = normalize(generate_eulerian(params)).graph;
    if (g.edge_count() > max_edges) continue;
    out.push_back({"random#" + std::to_string(params.seed), std::move(g)});
  }
  return out;
}

const std::vector<CorpusEntry>& standard_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> all = exhaustive_corpus(5);
    std::vector<CorpusEntry> sample = random_corpus(500, 12, 20261016);
    all.insert(all.end(), std::make_move_iterator(sample.begin()), std::make_move_iterator(sample.end()));
    return all;
  }();
  return corpus;
}

}  // namespace eulersafe::testing
