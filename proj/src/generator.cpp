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

#include "eulersafe/generator.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulersafe/error.hpp"
#include "eulersafe/random.hpp"

namespace eulersafe {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }

  std::vector<std::size_t> parent;
};

}  // namespace

Graph generate_eulerian(const GeneratorParams& params) {
  const std::size_t n = params.nodes;
  const std::size_t max_len = params.max_cycle_length == 0 ? n : params.max_cycle_length;
  if (n < 2) throw ContractError("generator needs at least 2 nodes");
  if (params.cycles == 0) throw ContractError("generator needs at least 1 cycle");
  if (max_len < 2 || max_len > n) throw ContractError("max cycle length must lie in [2, nodes]");

  SplitMix64 rng(params.seed);
  std::vector<std::uint32_t> perm(n);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<char> touched(n);

  for (std::size_t attempt = 0; attempt < params.max_attempts; ++attempt) {
    std::iota(perm.begin(), perm.end(), std::uint32_t{0});
    edges.clear();
    std::fill(touched.begin(), touched.end(), 0);
    DisjointSets sets(n);
    std::size_t touched_count = 0;
    std::size_t merges = 0;

    for (std::size_t c = 0; c < params.cycles; ++c) {
      const std::size_t k = rng.between(2, max_len);
      for (std::size_t i = 0; i < k; ++i) std::swap(perm[i], perm[i + rng.below(n - i)]);
      for (std::size_t i = 0; i < k; ++i) {
        const std::uint32_t from = perm[i];
        const std::uint32_t to = perm[(i + 1) % k];
        edges.emplace_back(from, to);
        if (!touched[from]) {
          touched[from] = 1;
          ++touched_count;
        }
        if (sets.unite(from, to)) ++merges;
      }
    }
    if (merges + 1 != touched_count) continue;

    Graph::Builder builder;
    builder.reserve(touched_count, edges.size());
    for (const auto& [from, to] : edges) {
      builder.add_edge("v" + std::to_string(from), "v" + std::to_string(to));
    }
    return std::move(builder).build();
  }
  throw std::runtime_error("generator: no weakly connected draw after " + std::to_string(params.max_attempts) +
                           " attempts");
}

}  // namespace eulersafe
