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
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "eulersafe/graph.hpp"

namespace eulersafe {

/// Underlying undirected multigraph U(G): one undirected edge per directed
/// edge, same node ids. Antiparallel directed pairs become parallel edges.
class UGraph {
 public:
  struct Incidence {
    NodeId other;
    EdgeId edge;
  };

  UGraph() = default;
  UGraph(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }
  std::pair<NodeId, NodeId> edge(EdgeId e) const { return edges_[e]; }
  std::span<const Incidence> incident(NodeId v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

 private:
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidence_;
};

UGraph underlying_undirected(const Graph& g);

/// Depth-first low-link data for a connected UGraph.
///
/// Besides the articulation flags it keeps enough of the DFS tree to answer
/// "which component of U \ v holds x" in O(log deg v).
class CutAnalysis {
 public:
  bool is_cut_node(NodeId v) const { return cut_[v] != 0; }
  /// Ascending node ids.
  std::vector<NodeId> cut_nodes() const;
  std::size_t node_count() const { return discovery_.size(); }

  /// Label of the component of U \ v containing x (x != v). Labels are only
  /// comparable for the same v; x and y share a component of U \ v iff their
  /// labels are equal.
  NodeId component_after_removal(NodeId v, NodeId x) const;

  NodeId root() const { return root_; }
  NodeId parent(NodeId v) const { return parent_[v]; }

 private:
  friend CutAnalysis analyze_cut_nodes(const UGraph& u);

  NodeId root_ = 0;
  std::vector<std::uint32_t> discovery_;
  std::vector<std::uint32_t> finish_;  // one past the largest discovery time in the subtree
  std::vector<std::uint32_t> low_;
  std::vector<NodeId> parent_;
  std::vector<std::size_t> child_offsets_;
  std::vector<NodeId> children_;  // per node, in discovery order
  std::vector<char> cut_;
};

/// Iterative Tarjan low-link DFS rooted at node 0. Throws ContractError if u
/// is disconnected. Parallel edges are distinguished by edge id, so a doubled
/// edge is never mistaken for a bridge.
CutAnalysis analyze_cut_nodes(const UGraph& u);

/// Articulation points of a connected UGraph, ascending.
std::vector<NodeId> articulation_points(const UGraph& u);

inline constexpr std::uint32_t kRemovedNode = std::numeric_limits<std::uint32_t>::max();

struct ComponentSplit {
  NodeId removed = kNoNode;
  /// Per node; kRemovedNode for the removed node, otherwise 0..count-1
  /// numbered in order of the smallest node id in each component.
  std::vector<std::uint32_t> component;
  std::size_t count = 0;
};

/// Connected components of U \ v by direct traversal.
ComponentSplit component_split(const UGraph& u, NodeId v);

}  // namespace eulersafe
