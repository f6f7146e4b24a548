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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "eulersafe/graph.hpp"

namespace eulersafe {

struct CircuitStats {
  // Number of times an out-edge was taken from a cursor or popped off the
  // traversal stack.
  std::size_t edge_visits = 0;
};

struct CircuitOptions {
  /// When set, each node's out-edges are consumed in a seeded random order
  /// instead of ascending edge id.
  std::optional<std::uint64_t> shuffle_seed;
  CircuitStats* stats = nullptr;
};

/// Hierholzer's algorithm with per-node next-unused-edge cursors; O(|E|).
/// The result is rotated to start with edge 0.
///
/// Requires g to be Eulerian and simple; throws ContractError otherwise.
Circuit find_eulerian_circuit(const Graph& g, const CircuitOptions& options = {});

/// Same traversal without the simplicity check (multigraphs allowed).
Circuit find_eulerian_circuit_multigraph(const Graph& g, const CircuitOptions& options = {});

/// Head-to-tail consistent, closed, and uses every edge of g exactly once.
bool verify_circuit(const Graph& g, const Circuit& c);

/// Positions i such that c[i] leaves v, in increasing order.
std::vector<std::size_t> occurrences(const Graph& g, const Circuit& c, NodeId v);

/// Exchanges the two sub-circuits between three consecutive visits of v.
///
/// With p_0 < p_1 < ... the positions where c leaves v, `occ` names the middle
/// visit p_occ and must satisfy 1 <= occ <= k-2 (so v must be visited at least
/// three times). The walks C_0 = c[p_{occ-1}, p_occ) and C_1 = c[p_occ, p_{occ+1})
/// are swapped in place. The result covers the same edges, and the edge that
/// entered v at p_occ is followed by a different edge. Applying the swap twice
/// with the same arguments restores c.
Circuit swap_at_node(const Graph& g, const Circuit& c, NodeId v, std::size_t occ);

}  // namespace eulersafe
