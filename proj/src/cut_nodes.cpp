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

#include "eulersafe/cut_nodes.hpp"

#include <algorithm>

#include "eulersafe/error.hpp"

namespace eulersafe {

UGraph::UGraph(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges)
    : edges_(std::move(edges)), offsets_(node_count + 1, 0) {
  for (const auto& [a, b] : edges_) {
    if (a >= node_count || b >= node_count) throw ContractError("undirected edge endpoint out of range");
    ++offsets_[a + 1];
    ++offsets_[b + 1];
  }
  for (std::size_t v = 0; v < node_count; ++v) offsets_[v + 1] += offsets_[v];
  incidence_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto [a, b] = edges_[e];
    incidence_[fill[a]++] = {b, e};
    incidence_[fill[b]++] = {a, e};
  }
}

UGraph underlying_undirected(const Graph& g) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.emplace_back(e.tail, e.head);
  return UGraph(g.node_count(), std::move(edges));
}

std::vector<NodeId> CutAnalysis::cut_nodes() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < cut_.size(); ++v) {
    if (cut_[v]) out.push_back(v);
  }
  return out;
}

NodeId CutAnalysis::component_after_removal(NodeId v, NodeId x) const {
  const bool below_v = discovery_[x] > discovery_[v] && discovery_[x] < finish_[v];
  if (!below_v) return v;  // the side containing v's parent
  // Children are stored in discovery order; their subtrees are contiguous
  // discovery intervals, so the last child discovered no later than x owns it.
  const auto first = children_.begin() + static_cast<std::ptrdiff_t>(child_offsets_[v]);
  const auto last = children_.begin() + static_cast<std::ptrdiff_t>(child_offsets_[v + 1]);
  const auto it = std::upper_bound(first, last, discovery_[x],
                                   [this](std::uint32_t d, NodeId c) { return d < discovery_[c]; });
  const NodeId child = *(it - 1);
  if (v == root_ || low_[child] >= discovery_[v]) return child;
  return v;
}

CutAnalysis analyze_cut_nodes(const UGraph& u) {
  const std::size_t n = u.node_count();
  CutAnalysis out;
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  out.discovery_.assign(n, kUnseen);
  out.finish_.assign(n, 0);
  out.low_.assign(n, 0);
  out.parent_.assign(n, kNoNode);
  out.cut_.assign(n, 0);
  if (n == 0) {
    out.child_offsets_.assign(1, 0);
    return out;
  }

  struct Frame {
    NodeId node;
    EdgeId via;  // tree edge into node, kNoEdge at the root
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::vector<NodeId> order;
  order.reserve(n);
  std::uint32_t time = 0;
  std::size_t root_children = 0;

  out.root_ = 0;
  out.discovery_[0] = out.low_[0] = time++;
  order.push_back(0);
  stack.push_back({0, kNoEdge, 0});
  while (!stack.empty()) {
    Frame& frame = stack.back();
    const NodeId v = frame.node;
    const auto inc = u.incident(v);
    if (frame.next < inc.size()) {
      const auto [w, e] = inc[frame.next++];
      if (e == frame.via) continue;
      if (out.discovery_[w] == kUnseen) {
        out.parent_[w] = v;
        out.discovery_[w] = out.low_[w] = time++;
        order.push_back(w);
        if (v == out.root_) ++root_children;
        stack.push_back({w, e, 0});
      } else {
        out.low_[v] = std::min(out.low_[v], out.discovery_[w]);
      }
      continue;
    }
    out.finish_[v] = time;
    stack.pop_back();
    if (!stack.empty()) {
      const NodeId p = stack.back().node;
      out.low_[p] = std::min(out.low_[p], out.low_[v]);
      if (p != out.root_ && out.low_[v] >= out.discovery_[p]) out.cut_[p] = 1;
    }
  }
  if (order.size() != n) throw ContractError("undirected graph is not connected");
  if (root_children >= 2) out.cut_[out.root_] = 1;

  out.child_offsets_.assign(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (out.parent_[v] != kNoNode) ++out.child_offsets_[out.parent_[v] + 1];
  }
  for (std::size_t v = 0; v < n; ++v) out.child_offsets_[v + 1] += out.child_offsets_[v];
  out.children_.resize(n - 1);
  std::vector<std::size_t> fill(out.child_offsets_.begin(), out.child_offsets_.end() - 1);
  for (NodeId v : order) {
    if (out.parent_[v] != kNoNode) out.children_[fill[out.parent_[v]]++] = v;
  }
  return out;
}

std::vector<NodeId> articulation_points(const UGraph& u) { return analyze_cut_nodes(u).cut_nodes(); }

ComponentSplit component_split(const UGraph& u, NodeId v) {
  const std::size_t n = u.node_count();
  ComponentSplit split;
  split.removed = v;
  split.component.assign(n, kRemovedNode);
  std::vector<char> seen(n, 0);
  if (v < n) seen[v] = 1;
  std::vector<NodeId> stack;
  std::uint32_t next_id = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    split.component[s] = next_id;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      for (const auto& [y, e] : u.incident(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          split.component[y] = next_id;
          stack.push_back(y);
        }
      }
    }
    ++next_id;
  }
  split.count = next_id;
  return split;
}

}  // namespace eulersafe
