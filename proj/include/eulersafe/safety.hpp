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
#include <string_view>
#include <utility>
#include <vector>

#include "eulersafe/circuit.hpp"
#include "eulersafe/cut_nodes.hpp"
#include "eulersafe/graph.hpp"

namespace eulersafe {

struct NodeClass {
  std::size_t degree = 0;
  bool cut_node = false;
  /// Member of A(G): degree 1, or degree 2 and a cut node of U(G).
  bool in_a = false;
};

/// One entry per node; O(|E|). Requires a normalized Eulerian graph.
std::vector<NodeClass> classify_nodes(const Graph& g);

enum class SafetyReason {
  kDegreeOne,
  kCutSplit,
  kDegreeTooHigh,
  kNotCutNode,
  kNotInAnyCircuit,
  kEdgesMissing,
};

std::string_view to_string(SafetyReason reason);

struct SafetyEvidence {
  bool safe = false;
  SafetyReason reason = SafetyReason::kEdgesMissing;
  /// Component labels of u and w in U(G) \ v; set whenever v has degree 2
  /// and is a cut node. Labels are only meaningful relative to each other.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> components;
};

/// Whether the edge pair (u,v),(v,w) is consecutive in every Eulerian
/// circuit. Splits U(G) at v on demand, so a single query costs O(|E|).
/// Ids that are out of range or edges that do not meet at a node give
/// kEdgesMissing.
SafetyEvidence is_safe_pair(const Graph& g, EdgeId first, EdgeId second);

/// Batch form: one O(|E|) preprocessing pass, then each query costs
/// O(log d(v)).
class SafetyIndex {
 public:
  explicit SafetyIndex(const Graph& g);

  SafetyEvidence query(EdgeId first, EdgeId second) const;
  const std::vector<NodeClass>& classes() const { return classes_; }
  /// A(G) = V.
  bool all_in_a() const;

 private:
  const Graph* graph_;
  CutAnalysis cuts_;
  std::vector<NodeClass> classes_;
};

/// Accepts multigraphs. A non-loop parallel pair rules out uniqueness, as
/// does a self-loop at a node with three or more out-edges; everything else
/// is decided by A(G) = V on the normalized graph. Throws ContractError if g
/// is not Eulerian.
bool has_unique_eulerian_circuit(const Graph& g);

struct SafeWalkReport {
  /// Sorted by first edge id. When unique_circuit is set this holds exactly
  /// one walk: the whole Eulerian circuit, starting at its smallest edge id.
  std::vector<Walk> walks;
  bool unique_circuit = false;
  std::size_t total_edge_length = 0;
};

/// Cuts an Eulerian circuit at every visit of a node outside A(G).
/// Requires a normalized Eulerian graph.
SafeWalkReport maximal_safe_walks(const Graph& g);
/// Same, cutting the supplied Eulerian circuit of g.
SafeWalkReport maximal_safe_walks(const Graph& g, const Circuit& circuit);

/// Rewrites a report over a normalized graph onto original edge ids.
SafeWalkReport project(const SafeWalkReport& report, const NormalizationMap& map);

/// normalize + maximal_safe_walks + project, for raw multigraph input.
SafeWalkReport analyze_safe_walks(const Graph& raw);

}  // namespace eulersafe
