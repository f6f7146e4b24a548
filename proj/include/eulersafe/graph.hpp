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
#include <filesystem>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace eulersafe {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct Edge {
  NodeId tail;
  NodeId head;

  friend bool operator==(const Edge&, const Edge&) = default;
};

namespace detail {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

}  // namespace detail

/// Directed multigraph with stable edge ids and opaque string node labels.
///
/// Node ids are dense (0..node_count()-1) and assigned in order of first
/// appearance; edge ids are dense and assigned in insertion order. Out- and
/// in-adjacency are stored in CSR form, each list sorted by edge id. A Graph
/// is immutable once built.
class Graph {
 public:
  class Builder {
   public:
    /// Returns the id of `label`, creating the node if it is new.
    NodeId add_node(std::string_view label);
    EdgeId add_edge(std::string_view tail, std::string_view head);
    EdgeId add_edge(NodeId tail, NodeId head);

    void reserve(std::size_t nodes, std::size_t edges);
    bool has_node(std::string_view label) const;
    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    Graph build() &&;

   private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId, detail::StringHash, std::equal_to<>> index_;
    std::vector<Edge> edges_;
  };

  Graph() = default;

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  NodeId tail(EdgeId e) const { return edges_[e].tail; }
  NodeId head(EdgeId e) const { return edges_[e].head; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const EdgeId> out_edges(NodeId v) const {
    return {out_list_.data() + out_offsets_[v], out_list_.data() + out_offsets_[v + 1]};
  }
  std::span<const EdgeId> in_edges(NodeId v) const {
    return {in_list_.data() + in_offsets_[v], in_list_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(NodeId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(NodeId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

  const std::string& label(NodeId v) const { return labels_[v]; }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<NodeId> find_node(std::string_view label) const;

  /// No self-loops and no two edges with the same (tail, head).
  bool is_simple() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId, detail::StringHash, std::equal_to<>> index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<EdgeId> out_list_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<EdgeId> in_list_;
};

/// Parses the line-oriented edge list format: one "tail head" pair per line,
/// '#' starts a comment line, blank lines are skipped. Edge ids follow line
/// order starting at 0.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::filesystem::path& path);
std::string to_edge_list(const Graph& g);

/// Head-to-tail sequence of edge ids.
class Walk {
 public:
  Walk() = default;
  explicit Walk(std::vector<EdgeId> edges) : edges_(std::move(edges)) {}

  std::span<const EdgeId> edges() const { return edges_; }
  std::size_t length() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  EdgeId operator[](std::size_t i) const { return edges_[i]; }

  /// (v_0, ..., v_k); empty for an empty walk.
  std::vector<NodeId> nodes(const Graph& g) const;
  /// Every id is an edge of g and consecutive edges meet head to tail.
  bool is_consistent(const Graph& g) const;

  friend bool operator==(const Walk&, const Walk&) = default;

 protected:
  std::vector<EdgeId> edges_;
};

/// A walk whose last edge ends where the first one starts.
class Circuit : public Walk {
 public:
  using Walk::Walk;

  bool is_closed(const Graph& g) const;
  /// Cyclic shift so that position `offset` becomes the first edge.
  Circuit rotated(std::size_t offset) const;
  /// Rotation starting at the smallest edge id.
  Circuit canonical() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

enum class EulerViolation { kNone, kUnbalanced, kDisconnected };

struct EulerCheck {
  bool eulerian = false;
  EulerViolation violation = EulerViolation::kNone;
  NodeId witness = kNoNode;
  std::size_t witness_out_degree = 0;
  std::size_t witness_in_degree = 0;

  explicit operator bool() const { return eulerian; }
  std::string describe(const Graph& g) const;
};

/// Balanced degrees at every node and a single weakly connected component.
/// Degree balance is checked first, in node-id order.
EulerCheck is_eulerian(const Graph& g);

/// Throws ContractError naming the violated condition unless g is Eulerian.
void require_eulerian(const Graph& g);
/// Throws ContractError unless g is Eulerian and simple.
void require_normalized_eulerian(const Graph& g);

/// Provenance of a normalized graph.
///
/// A rewritten edge (t, h) keeps its id for the first half (t, s) and gets a
/// fresh id, appended after all original ids, for the second half (s, h).
/// Unrewritten edges keep their id unchanged.
struct NormalizationMap {
  struct Rewrite {
    EdgeId original;
    NodeId subdivision;
    EdgeId first_half;
    EdgeId second_half;
    bool self_loop;
  };

  std::size_t original_node_count = 0;
  std::size_t original_edge_count = 0;
  std::vector<Rewrite> rewrites;
  std::size_t self_loops = 0;
  std::size_t parallel_duplicates = 0;

  bool empty() const { return rewrites.empty(); }
  EdgeId original_edge(EdgeId normalized) const;
  bool is_second_half(EdgeId normalized) const { return normalized >= original_edge_count; }
  bool is_subdivision(NodeId v) const { return v >= original_node_count; }

  /// Maps a walk of the normalized graph onto original edge ids; the two
  /// halves of a rewritten edge collapse into one occurrence.
  Walk project(const Walk& w) const;
  Circuit project(const Circuit& c) const;
};

struct Normalized {
  Graph graph;
  NormalizationMap map;
};

/// Replaces every self-loop, and every parallel edge after the lowest id of
/// its group, by a length-two path through a fresh node.
Normalized normalize(const Graph& g);

}  // namespace eulersafe
