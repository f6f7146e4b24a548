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

#include "eulersafe/circuit.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "detail.hpp"
#include "eulersafe/error.hpp"
#include "eulersafe/random.hpp"

namespace eulersafe {

namespace detail {

Circuit hierholzer(const Graph& g, const CircuitOptions& options) {
  const std::size_t m = g.edge_count();
  if (m == 0) return Circuit{};

  // Out-edges are taken in ascending id order unless a shuffle is requested.
  // Heads sit next to edge ids and tails ride on the trail, so each step
  // touches one node record and one slot.
  struct Slot {
    EdgeId edge;
    NodeId node;
  };
  struct Range {
    std::uint32_t next;
    std::uint32_t end;
  };
  std::vector<Slot> slots;
  slots.reserve(m);
  std::vector<Range> range(g.node_count());
  std::optional<SplitMix64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);
  std::vector<EdgeId> order;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    range[v].next = static_cast<std::uint32_t>(slots.size());
    const auto out = g.out_edges(v);
    if (rng) {
      order.assign(out.begin(), out.end());
      shuffle(std::span<EdgeId>(order), *rng);
      for (EdgeId e : order) slots.push_back({e, g.head(e)});
    } else {
      for (EdgeId e : out) slots.push_back({e, g.head(e)});
    }
    range[v].end = static_cast<std::uint32_t>(slots.size());
  }

  std::size_t visits = 0;
  std::vector<EdgeId> reversed;
  reversed.reserve(m);
  // The current trail as (edge, tail) pairs; the current node is the head of
  // the last edge, or the start node when empty.
  std::vector<Slot> trail;
  trail.reserve(m);
  NodeId current = g.tail(0);
  while (true) {
    Range& r = range[current];
    if (r.next < r.end) {
      const Slot s = slots[r.next++];
      ++visits;
      trail.push_back({s.edge, current});
      current = s.node;
    } else if (!trail.empty()) {
      const Slot s = trail.back();
      trail.pop_back();
      ++visits;
      reversed.push_back(s.edge);
      current = s.node;
    } else {
      break;
    }
  }
  if (options.stats) options.stats->edge_visits += visits;

  // Reverse and rotate edge 0 to the front in one pass.
  const auto zero = static_cast<std::size_t>(std::find(reversed.begin(), reversed.end(), EdgeId{0}) - reversed.begin());
  std::vector<EdgeId> edges(m);
  for (std::size_t i = 0; i < m; ++i) edges[i] = reversed[(zero + m - i) % m];
  return Circuit(std::move(edges));
}

}  // namespace detail

Circuit find_eulerian_circuit(const Graph& g, const CircuitOptions& options) {
  require_normalized_eulerian(g);
  return detail::hierholzer(g, options);
}

Circuit find_eulerian_circuit_multigraph(const Graph& g, const CircuitOptions& options) {
  require_eulerian(g);
  return detail::hierholzer(g, options);
}

bool verify_circuit(const Graph& g, const Circuit& c) {
  if (c.length() != g.edge_count() || c.empty()) return false;
  if (!c.is_consistent(g) || !c.is_closed(g)) return false;
  std::vector<char> used(g.edge_count(), 0);
  for (EdgeId e : c.edges()) {
    if (used[e]) return false;
    used[e] = 1;
  }
  return true;
}

std::vector<std::size_t> occurrences(const Graph& g, const Circuit& c, NodeId v) {
  std::vector<std::size_t> out;
  const auto edges = c.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (g.tail(edges[i]) == v) out.push_back(i);
  }
  return out;
}

Circuit swap_at_node(const Graph& g, const Circuit& c, NodeId v, std::size_t occ) {
  const auto visits = occurrences(g, c, v);
  if (visits.size() < 3) {
    throw ContractError("swap_at_node: node " + (v < g.node_count() ? g.label(v) : std::to_string(v)) +
                        " occurs " + std::to_string(visits.size()) + " times, need at least 3");
  }
  if (occ < 1 || occ + 1 >= visits.size()) {
    throw ContractError("swap_at_node: occurrence index " + std::to_string(occ) + " must lie in [1, " +
                        std::to_string(visits.size() - 2) + "]");
  }
  const auto edges = c.edges();
  const std::size_t first = visits[occ - 1];
  const std::size_t middle = visits[occ];
  const std::size_t last = visits[occ + 1];

  std::vector<EdgeId> out(edges.begin(), edges.end());
  auto it = out.begin() + static_cast<std::ptrdiff_t>(first);
  it = std::copy(edges.begin() + static_cast<std::ptrdiff_t>(middle),
                 edges.begin() + static_cast<std::ptrdiff_t>(last), it);
  std::copy(edges.begin() + static_cast<std::ptrdiff_t>(first), edges.begin() + static_cast<std::ptrdiff_t>(middle),
            it);
  return Circuit(std::move(out));
}

}  // namespace eulersafe
