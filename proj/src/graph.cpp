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

#include "eulersafe/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "eulersafe/error.hpp"

namespace eulersafe {

NodeId Graph::Builder::add_node(std::string_view label) {
  if (auto it = index_.find(label); it != index_.end()) return it->second;
  const auto id = static_cast<NodeId>(labels_.size());
  labels_.emplace_back(label);
  index_.emplace(labels_.back(), id);
  return id;
}

EdgeId Graph::Builder::add_edge(std::string_view tail, std::string_view head) {
  const NodeId t = add_node(tail);
  const NodeId h = add_node(head);
  return add_edge(t, h);
}

EdgeId Graph::Builder::add_edge(NodeId tail, NodeId head) {
  if (tail >= labels_.size() || head >= labels_.size()) {
    throw ContractError("edge endpoint is not a declared node");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({tail, head});
  return id;
}

void Graph::Builder::reserve(std::size_t nodes, std::size_t edges) {
  labels_.reserve(nodes);
  index_.reserve(nodes);
  edges_.reserve(edges);
}

bool Graph::Builder::has_node(std::string_view label) const {
  return index_.find(label) != index_.end();
}

Graph Graph::Builder::build() && {
  Graph g;
  const std::size_t n = labels_.size();
  g.labels_ = std::move(labels_);
  g.index_ = std::move(index_);
  g.edges_ = std::move(edges_);

  // Counting sort keeps each adjacency list in ascending edge-id order.
  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.out_offsets_[e.tail + 1];
    ++g.in_offsets_[e.head + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.out_offsets_[v + 1] += g.out_offsets_[v];
    g.in_offsets_[v + 1] += g.in_offsets_[v];
  }
  g.out_list_.resize(g.edges_.size());
  g.in_list_.resize(g.edges_.size());
  std::vector<std::size_t> out_fill(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    g.out_list_[out_fill[g.edges_[id].tail]++] = id;
    g.in_list_[in_fill[g.edges_[id].head]++] = id;
  }
  return g;
}

std::optional<NodeId> Graph::find_node(std::string_view label) const {
  if (auto it = index_.find(label); it != index_.end()) return it->second;
  return std::nullopt;
}

bool Graph::is_simple() const {
  std::vector<NodeId> stamp(node_count(), kNoNode);
  for (NodeId v = 0; v < node_count(); ++v) {
    for (EdgeId e : out_edges(v)) {
      const NodeId h = head(e);
      if (h == v || stamp[h] == v) return false;
      stamp[h] = v;
    }
  }
  return true;
}

Graph parse_edge_list(std::string_view text) {
  Graph::Builder builder;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::string_view tokens[2];
    std::size_t count = 0;
    std::size_t i = 0;
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      if (i == line.size()) break;
      if (count == 0 && line[i] == '#') break;
      const std::size_t start = i;
      while (i < line.size() && !is_space(line[i])) ++i;
      if (count < 2) tokens[count] = line.substr(start, i - start);
      ++count;
    }
    if (count == 0) continue;
    if (count != 2) {
      throw ParseError(line_no, "expected two node labels \"tail head\", found " + std::to_string(count) +
                                    " token" + (count == 1 ? "" : "s"));
    }
    builder.add_edge(tokens[0], tokens[1]);
  }
  if (builder.edge_count() == 0) throw ParseError(0, "graph must have at least one edge");
  return std::move(builder).build();
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return parse_edge_list(buffer.str());
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    out += g.label(e.tail);
    out += ' ';
    out += g.label(e.head);
    out += '\n';
  }
  return out;
}

std::vector<NodeId> Walk::nodes(const Graph& g) const {
  std::vector<NodeId> out;
  if (edges_.empty()) return out;
  out.reserve(edges_.size() + 1);
  out.push_back(g.tail(edges_.front()));
  for (EdgeId e : edges_) out.push_back(g.head(e));
  return out;
}

bool Walk::is_consistent(const Graph& g) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i] >= g.edge_count()) return false;
    if (i > 0 && g.head(edges_[i - 1]) != g.tail(edges_[i])) return false;
  }
  return true;
}

bool Circuit::is_closed(const Graph& g) const {
  return !edges_.empty() && g.head(edges_.back()) == g.tail(edges_.front());
}

Circuit Circuit::rotated(std::size_t offset) const {
  if (edges_.empty()) return *this;
  std::vector<EdgeId> out(edges_.size());
  std::rotate_copy(edges_.begin(), edges_.begin() + static_cast<std::ptrdiff_t>(offset % edges_.size()),
                   edges_.end(), out.begin());
  return Circuit(std::move(out));
}

Circuit Circuit::canonical() const {
  if (edges_.empty()) return *this;
  const auto it = std::min_element(edges_.begin(), edges_.end());
  return rotated(static_cast<std::size_t>(it - edges_.begin()));
}

std::string EulerCheck::describe(const Graph& g) const {
  switch (violation) {
    case EulerViolation::kNone:
      return "eulerian";
    case EulerViolation::kUnbalanced:
      return "unbalanced node " + g.label(witness) + " (out " + std::to_string(witness_out_degree) + ", in " +
             std::to_string(witness_in_degree) + ")";
    case EulerViolation::kDisconnected:
      return "not weakly connected (node " + g.label(witness) + " unreachable from " + g.label(0) + ")";
  }
  return "unknown";
}

EulerCheck is_eulerian(const Graph& g) {
  EulerCheck check;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.out_degree(v) != g.in_degree(v)) {
      check.violation = EulerViolation::kUnbalanced;
      check.witness = v;
      check.witness_out_degree = g.out_degree(v);
      check.witness_in_degree = g.in_degree(v);
      return check;
    }
  }
  if (g.node_count() == 0) {
    check.eulerian = true;
    return check;
  }

  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.out_edges(v)) {
      if (!seen[g.head(e)]) {
        seen[g.head(e)] = 1;
        stack.push_back(g.head(e));
      }
    }
    for (EdgeId e : g.in_edges(v)) {
      if (!seen[g.tail(e)]) {
        seen[g.tail(e)] = 1;
        stack.push_back(g.tail(e));
      }
    }
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!seen[v]) {
      check.violation = EulerViolation::kDisconnected;
      check.witness = v;
      check.witness_out_degree = g.out_degree(v);
      check.witness_in_degree = g.in_degree(v);
      return check;
    }
  }
  check.eulerian = true;
  return check;
}

void require_eulerian(const Graph& g) {
  if (const EulerCheck check = is_eulerian(g); !check) {
    throw ContractError("graph is not Eulerian: " + check.describe(g));
  }
}

void require_normalized_eulerian(const Graph& g) {
  require_eulerian(g);
  if (!g.is_simple()) throw ContractError("graph has self-loops or parallel edges; normalize it first");
}

}  // namespace eulersafe
