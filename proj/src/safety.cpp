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

#include "eulersafe/safety.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "detail.hpp"
#include "eulersafe/error.hpp"

namespace eulersafe {

namespace {

std::vector<NodeClass> classes_from(const Graph& g, const CutAnalysis& cuts) {
  std::vector<NodeClass> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    NodeClass& c = out[v];
    c.degree = g.out_degree(v);
    c.cut_node = cuts.is_cut_node(v);
    c.in_a = c.degree == 1 || (c.degree == 2 && c.cut_node);
  }
  return out;
}

// Shared by both query routes once the pair is known to meet at v.
std::optional<SafetyEvidence> degree_verdict(std::size_t degree) {
  if (degree == 1) return SafetyEvidence{true, SafetyReason::kDegreeOne, std::nullopt};
  if (degree >= 3) return SafetyEvidence{false, SafetyReason::kDegreeTooHigh, std::nullopt};
  return std::nullopt;
}

bool meets(const Graph& g, EdgeId first, EdgeId second) {
  return first < g.edge_count() && second < g.edge_count() && g.head(first) == g.tail(second);
}

SafetyEvidence split_verdict(std::uint32_t from, std::uint32_t to) {
  SafetyEvidence ev;
  ev.components = std::make_pair(from, to);
  ev.safe = from != to;
  ev.reason = ev.safe ? SafetyReason::kCutSplit : SafetyReason::kNotInAnyCircuit;
  return ev;
}

}  // namespace

std::vector<NodeClass> classify_nodes(const Graph& g) {
  require_normalized_eulerian(g);
  return classes_from(g, analyze_cut_nodes(underlying_undirected(g)));
}

std::string_view to_string(SafetyReason reason) {
  switch (reason) {
    case SafetyReason::kDegreeOne:
      return "degree-one";
    case SafetyReason::kCutSplit:
      return "cut-split";
    case SafetyReason::kDegreeTooHigh:
      return "degree-too-high";
    case SafetyReason::kNotCutNode:
      return "not-cut-node";
    case SafetyReason::kNotInAnyCircuit:
      return "not-in-any-circuit";
    case SafetyReason::kEdgesMissing:
      return "edges-missing";
  }
  return "unknown";
}

SafetyEvidence is_safe_pair(const Graph& g, EdgeId first, EdgeId second) {
  require_normalized_eulerian(g);
  if (!meets(g, first, second)) return {};
  const NodeId v = g.head(first);
  if (auto ev = degree_verdict(g.out_degree(v))) return *ev;

  const ComponentSplit split = component_split(underlying_undirected(g), v);
  if (split.count < 2) return {false, SafetyReason::kNotCutNode, std::nullopt};
  return split_verdict(split.component[g.tail(first)], split.component[g.head(second)]);
}

SafetyIndex::SafetyIndex(const Graph& g) : graph_(&g) {
  require_normalized_eulerian(g);
  cuts_ = analyze_cut_nodes(underlying_undirected(g));
  classes_ = classes_from(g, cuts_);
}

SafetyEvidence SafetyIndex::query(EdgeId first, EdgeId second) const {
  const Graph& g = *graph_;
  if (!meets(g, first, second)) return {};
  const NodeId v = g.head(first);
  if (auto ev = degree_verdict(classes_[v].degree)) return *ev;
  if (!classes_[v].cut_node) return {false, SafetyReason::kNotCutNode, std::nullopt};
  return split_verdict(cuts_.component_after_removal(v, g.tail(first)),
                       cuts_.component_after_removal(v, g.head(second)));
}

bool SafetyIndex::all_in_a() const {
  return std::all_of(classes_.begin(), classes_.end(), [](const NodeClass& c) { return c.in_a; });
}

bool has_unique_eulerian_circuit(const Graph& g) {
  require_eulerian(g);
  std::vector<NodeId> stamp(g.node_count(), kNoNode);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (EdgeId e : g.out_edges(v)) {
      const NodeId h = g.head(e);
      if (h == v) {
        // A loop needs exactly one other way out of v; a lone loop is the
        // whole graph and trivially unique.
        if (g.out_degree(v) >= 3) return false;
        continue;
      }
      if (stamp[h] == v) return false;
      stamp[h] = v;
    }
  }
  if (g.is_simple()) {
    return SafetyIndex(g).all_in_a();
  }
  const Normalized norm = normalize(g);
  return SafetyIndex(norm.graph).all_in_a();
}

namespace {

// Orders walks by first edge id in O(bound); first edges are pairwise distinct.
void order_by_first_edge(std::vector<Walk>& walks, std::size_t bound) {
  std::vector<std::uint32_t> slot(bound, std::numeric_limits<std::uint32_t>::max());
  for (std::size_t i = 0; i < walks.size(); ++i) slot[walks[i][0]] = static_cast<std::uint32_t>(i);
  std::vector<Walk> ordered;
  ordered.reserve(walks.size());
  for (std::uint32_t i : slot) {
    if (i != std::numeric_limits<std::uint32_t>::max()) ordered.push_back(std::move(walks[i]));
  }
  walks = std::move(ordered);
}

// Cuts the circuit at every position whose node lies outside A(G).
SafeWalkReport walks_along(const Graph& g, const std::vector<NodeClass>& classes, const Circuit& circuit) {
  const auto edges = circuit.edges();
  std::vector<std::size_t> cuts;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!classes[g.tail(edges[i])].in_a) cuts.push_back(i);
  }

  SafeWalkReport report;
  report.total_edge_length = edges.size();
  if (cuts.empty()) {
    report.unique_circuit = true;
    const Circuit canon = circuit.canonical();
    report.walks.emplace_back(std::vector<EdgeId>(canon.edges().begin(), canon.edges().end()));
    return report;
  }

  report.walks.reserve(cuts.size());
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    const std::size_t from = cuts[j];
    const std::size_t to = j + 1 < cuts.size() ? cuts[j + 1] : cuts.front() + edges.size();
    std::vector<EdgeId> segment;
    segment.reserve(to - from);
    for (std::size_t i = from; i < to; ++i) segment.push_back(edges[i % edges.size()]);
    report.walks.emplace_back(std::move(segment));
  }
  order_by_first_edge(report.walks, g.edge_count());
  return report;
}

// g is a normalized Eulerian graph.
SafeWalkReport pipeline(const Graph& g) {
  const std::vector<NodeClass> classes = classes_from(g, analyze_cut_nodes(underlying_undirected(g)));
  return walks_along(g, classes, detail::hierholzer(g, {}));
}

}  // namespace

SafeWalkReport maximal_safe_walks(const Graph& g) {
  require_normalized_eulerian(g);
  return pipeline(g);
}

SafeWalkReport maximal_safe_walks(const Graph& g, const Circuit& circuit) {
  const std::vector<NodeClass> classes = classify_nodes(g);
  if (!verify_circuit(g, circuit)) throw ContractError("maximal_safe_walks: supplied circuit is not Eulerian");
  return walks_along(g, classes, circuit);
}

SafeWalkReport project(const SafeWalkReport& report, const NormalizationMap& map) {
  SafeWalkReport out;
  out.unique_circuit = report.unique_circuit;
  out.walks.reserve(report.walks.size());
  for (const Walk& w : report.walks) {
    if (report.unique_circuit) {
      const Circuit c = map.project(Circuit(std::vector<EdgeId>(w.edges().begin(), w.edges().end())));
      out.walks.emplace_back(std::vector<EdgeId>(c.edges().begin(), c.edges().end()));
    } else {
      out.walks.push_back(map.project(w));
    }
    out.total_edge_length += out.walks.back().length();
  }
  order_by_first_edge(out.walks, map.original_edge_count);
  return out;
}

SafeWalkReport analyze_safe_walks(const Graph& raw) {
  require_eulerian(raw);
  if (raw.is_simple()) return pipeline(raw);
  // Normalization preserves balance and connectivity.
  const Normalized norm = normalize(raw);
  return project(pipeline(norm.graph), norm.map);
}

}  // namespace eulersafe
