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

#include <string>

#include "eulersafe/graph.hpp"

namespace eulersafe {

EdgeId NormalizationMap::original_edge(EdgeId normalized) const {
  if (normalized < original_edge_count) return normalized;
  return rewrites[normalized - original_edge_count].original;
}

Walk NormalizationMap::project(const Walk& w) const {
  std::vector<EdgeId> out;
  out.reserve(w.length());
  const auto edges = w.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeId e = edges[i];
    if (is_second_half(e) && i > 0 && edges[i - 1] == rewrites[e - original_edge_count].first_half) continue;
    out.push_back(original_edge(e));
  }
  return Walk(std::move(out));
}

Circuit NormalizationMap::project(const Circuit& c) const {
  if (c.empty()) return c;
  const auto edges = c.edges();
  // A circuit starting on a second half is rotated back onto its first half.
  std::size_t start = 0;
  if (is_second_half(edges.front())) start = edges.size() - 1;
  const Circuit aligned = c.rotated(start);
  const Walk projected = project(static_cast<const Walk&>(aligned));
  return Circuit(std::vector<EdgeId>(projected.edges().begin(), projected.edges().end()));
}

Normalized normalize(const Graph& g) {
  const std::size_t n = g.node_count();
  const std::size_t m = g.edge_count();

  std::vector<char> rewrite(m, 0);
  std::vector<NodeId> stamp(n, kNoNode);
  for (NodeId v = 0; v < n; ++v) {
    for (EdgeId e : g.out_edges(v)) {
      const NodeId h = g.head(e);
      if (h == v || stamp[h] == v) {
        rewrite[e] = 1;
      } else {
        stamp[h] = v;
      }
    }
  }

  Normalized result;
  NormalizationMap& map = result.map;
  map.original_node_count = n;
  map.original_edge_count = m;

  Graph::Builder builder;
  builder.reserve(n, m);
  for (NodeId v = 0; v < n; ++v) builder.add_node(g.label(v));

  std::size_t label_counter = 0;
  const auto fresh_label = [&] {
    std::string label;
    do {
      label = "s" + std::to_string(label_counter++);
    } while (builder.has_node(label));
    return label;
  };

  std::vector<std::pair<NodeId, NodeId>> second_halves;
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& edge = g.edge(e);
    if (!rewrite[e]) {
      builder.add_edge(edge.tail, edge.head);
      continue;
    }
    const NodeId s = builder.add_node(fresh_label());
    builder.add_edge(edge.tail, s);
    second_halves.emplace_back(s, edge.head);
    const bool loop = edge.tail == edge.head;
    map.rewrites.push_back({e, s, e, static_cast<EdgeId>(m + map.rewrites.size()), loop});
    if (loop) {
      ++map.self_loops;
    } else {
      ++map.parallel_duplicates;
    }
  }
  for (const auto& [s, h] : second_halves) builder.add_edge(s, h);

  result.graph = std::move(builder).build();
  return result;
}

}  // namespace eulersafe
