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

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "eulersafe/graph.hpp"

namespace eulersafe {

// Ground-truth routes that never look at cut nodes or A(G). They are
// exponential or cubic and meant for small graphs.

struct Enumeration {
  /// One representative per rotation class, each starting with edge 0.
  std::vector<Circuit> circuits;
  /// More than `cap` circuits exist; `circuits` holds the first `cap`.
  bool overflow = false;
};

/// Backtracking over unused out-edges in ascending id order, anchored at
/// edge 0. Works on multigraphs; throws ContractError if g is not Eulerian.
Enumeration enumerate_eulerian_circuits(const Graph& g, std::size_t cap);

/// Streaming form of the same search. `visit` sees each circuit's edge
/// sequence; returns the number visited (at most cap) and sets *overflow
/// when the search stopped early.
std::size_t for_each_eulerian_circuit(const Graph& g, std::size_t cap,
                                      const std::function<void(std::span<const EdgeId>)>& visit,
                                      bool* overflow = nullptr);

/// Exact determinant by Bareiss fraction-free elimination.
mpz_class determinant(std::vector<std::vector<mpz_class>> matrix);

/// Spanning arborescences directed toward `root`: determinant of the
/// out-degree Laplacian with the root's row and column removed. Self-loops
/// do not contribute.
mpz_class count_arborescences(const Graph& g, NodeId root);

struct CountReport {
  mpz_class epsilon;
  mpz_class t;
  mpz_class degree_factorial_product;
  NodeId root = 0;
};

/// Number of Eulerian circuits up to rotation, by the BEST theorem, rooted
/// at node 0. Throws ContractError if g is not Eulerian.
CountReport count_best(const Graph& g);

struct BruteSafeWalks {
  /// Maximal walks appearing in every enumerated circuit, sorted by first
  /// edge id; a single circuit starting at its smallest edge id when every
  /// transition is forced.
  std::vector<Walk> walks;
  bool unique_circuit = false;
  std::size_t circuits = 0;
  bool overflow = false;
};

/// Enumerates all circuits and keeps the edge transitions common to all of
/// them; maximal chains of common transitions are the maximal safe walks.
BruteSafeWalks brute_force_safe_walks(const Graph& g, std::size_t cap);

/// Pevzner's cycle intersection graph for one edge-disjoint simple-cycle
/// decomposition.
struct IntersectionGraph {
  struct Link {
    std::size_t a;
    std::size_t b;
    NodeId shared;
  };

  /// Closed node sequences (first == last).
  std::vector<std::vector<NodeId>> cycles;
  std::vector<std::vector<EdgeId>> cycle_edges;
  /// One link per graph node shared by a pair of cycles.
  std::vector<Link> links;
  bool connected = false;
  bool tree = false;
};

/// Peels simple cycles by walking unused out-edges (ascending id) until a
/// node repeats. Throws ContractError if g is not Eulerian.
IntersectionGraph pevzner_intersection_graph(const Graph& g);

}  // namespace eulersafe
