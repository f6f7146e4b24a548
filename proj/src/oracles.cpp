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

#include "eulersafe/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "eulersafe/error.hpp"

namespace eulersafe {

namespace {

class CircuitSearch {
 public:
  CircuitSearch(const Graph& g, std::size_t cap, const std::function<void(std::span<const EdgeId>)>& visit)
      : g_(g), cap_(cap), visit_(visit), used_(g.edge_count(), 0) {
    path_.reserve(g.edge_count());
  }

  void run() {
    if (g_.edge_count() == 0) return;
    used_[0] = 1;
    path_.push_back(0);
    extend(g_.head(0));
  }

  std::size_t found() const { return found_; }
  bool overflow() const { return overflow_; }

 private:
  void extend(NodeId at) {
    if (path_.size() == g_.edge_count()) {
      if (at != g_.tail(0)) return;
      if (found_ == cap_) {
        overflow_ = true;
        return;
      }
      ++found_;
      visit_(path_);
      return;
    }
    for (EdgeId e : g_.out_edges(at)) {
      if (used_[e]) continue;
      used_[e] = 1;
      path_.push_back(e);
      extend(g_.head(e));
      path_.pop_back();
      used_[e] = 0;
      if (overflow_) return;
    }
  }

  const Graph& g_;
  std::size_t cap_;
  const std::function<void(std::span<const EdgeId>)>& visit_;
  std::vector<char> used_;
  std::vector<EdgeId> path_;
  std::size_t found_ = 0;
  bool overflow_ = false;
};

}  // namespace

std::size_t for_each_eulerian_circuit(const Graph& g, std::size_t cap,
                                      const std::function<void(std::span<const EdgeId>)>& visit, bool* overflow) {
  require_eulerian(g);
  CircuitSearch search(g, cap, visit);
  search.run();
  if (overflow) *overflow = search.overflow();
  return search.found();
}

Enumeration enumerate_eulerian_circuits(const Graph& g, std::size_t cap) {
  Enumeration out;
  for_each_eulerian_circuit(
      g, cap, [&](std::span<const EdgeId> c) { out.circuits.emplace_back(std::vector<EdgeId>(c.begin(), c.end())); },
      &out.overflow);
  return out;
}

mpz_class determinant(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

mpz_class count_arborescences(const Graph& g, NodeId root) {
  const std::size_t n = g.node_count();
  if (root >= n) throw ContractError("count_arborescences: root out of range");
  // Index map skipping the root.
  std::vector<std::size_t> index(n);
  for (NodeId v = 0, k = 0; v < n; ++v) index[v] = v == root ? n : k++;

  std::vector<std::vector<mpz_class>> laplacian(n - 1, std::vector<mpz_class>(n - 1, 0));
  for (const Edge& e : g.edges()) {
    if (e.tail == e.head || e.tail == root) continue;
    const std::size_t i = index[e.tail];
    laplacian[i][i] += 1;
    if (e.head != root) laplacian[i][index[e.head]] -= 1;
  }
  return determinant(std::move(laplacian));
}

CountReport count_best(const Graph& g) {
  require_eulerian(g);
  CountReport report;
  report.root = 0;
  report.t = count_arborescences(g, report.root);
  report.degree_factorial_product = 1;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), g.out_degree(v) - 1);
    report.degree_factorial_product *= f;
  }
  report.epsilon = report.t * report.degree_factorial_product;
  return report;
}

BruteSafeWalks brute_force_safe_walks(const Graph& g, std::size_t cap) {
  const std::size_t m = g.edge_count();
  // next[e]: the edge following e in every circuit seen so far, or kNoEdge
  // once two circuits disagree.
  std::vector<EdgeId> next(m, kNoEdge);
  std::vector<char> agreed(m, 1);

  BruteSafeWalks out;
  out.circuits = for_each_eulerian_circuit(
      g, cap,
      [&](std::span<const EdgeId> c) {
        for (std::size_t i = 0; i < c.size(); ++i) {
          const EdgeId e = c[i];
          const EdgeId succ = c[(i + 1) % c.size()];
          if (!agreed[e]) continue;
          if (next[e] == kNoEdge) {
            next[e] = succ;
          } else if (next[e] != succ) {
            agreed[e] = 0;
          }
        }
      },
      &out.overflow);
  if (out.circuits == 0 || out.overflow) return out;

  std::vector<EdgeId> prev(m, kNoEdge);
  for (EdgeId e = 0; e < m; ++e) {
    if (!agreed[e]) next[e] = kNoEdge;
    if (next[e] != kNoEdge) prev[next[e]] = e;
  }

  if (std::all_of(agreed.begin(), agreed.end(), [](char a) { return a != 0; })) {
    out.unique_circuit = true;
    std::vector<EdgeId> walk{0};
    for (EdgeId e = next[0]; e != 0; e = next[e]) walk.push_back(e);
    out.walks.emplace_back(std::move(walk));
    return out;
  }

  for (EdgeId e = 0; e < m; ++e) {
    if (prev[e] != kNoEdge) continue;
    std::vector<EdgeId> walk{e};
    for (EdgeId f = next[e]; f != kNoEdge; f = next[f]) walk.push_back(f);
    out.walks.emplace_back(std::move(walk));
  }
  std::sort(out.walks.begin(), out.walks.end(), [](const Walk& a, const Walk& b) { return a[0] < b[0]; });
  return out;
}

IntersectionGraph pevzner_intersection_graph(const Graph& g) {
  require_eulerian(g);
  const std::size_t n = g.node_count();
  IntersectionGraph ig;

  std::vector<std::size_t> cursor(n, 0);
  constexpr std::size_t kOff = static_cast<std::size_t>(-1);
  std::vector<std::size_t> position(n, kOff);
  std::vector<NodeId> path_nodes;
  std::vector<EdgeId> path_edges;

  for (NodeId start = 0; start < n; ++start) {
    while (cursor[start] < g.out_degree(start)) {
      path_nodes.assign(1, start);
      path_edges.clear();
      position[start] = 0;
      NodeId current = start;
      do {
        const EdgeId e = g.out_edges(current)[cursor[current]++];
        const NodeId next = g.head(e);
        path_edges.push_back(e);
        if (position[next] == kOff) {
          position[next] = path_nodes.size();
          path_nodes.push_back(next);
        } else {
          const std::size_t k = position[next];
          std::vector<NodeId> cycle(path_nodes.begin() + static_cast<std::ptrdiff_t>(k), path_nodes.end());
          cycle.push_back(next);
          ig.cycles.push_back(std::move(cycle));
          ig.cycle_edges.emplace_back(path_edges.begin() + static_cast<std::ptrdiff_t>(k), path_edges.end());
          for (std::size_t i = k + 1; i < path_nodes.size(); ++i) position[path_nodes[i]] = kOff;
          path_nodes.resize(k + 1);
          path_edges.resize(k);
        }
        current = next;
      } while (!path_edges.empty());
      position[start] = kOff;
    }
  }

  // Links: every pair of cycles through the same node.
  std::vector<std::vector<std::size_t>> through(n);
  for (std::size_t c = 0; c < ig.cycles.size(); ++c) {
    const auto& cycle = ig.cycles[c];
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) through[cycle[i]].push_back(c);
  }
  std::vector<std::size_t> parent(ig.cycles.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = ig.cycles.size();
  for (NodeId v = 0; v < n; ++v) {
    const auto& list = through[v];
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        ig.links.push_back({list[i], list[j], v});
        const std::size_t a = find(list[i]), b = find(list[j]);
        if (a != b) {
          parent[a] = b;
          --components;
        }
      }
    }
  }
  ig.connected = components <= 1;
  ig.tree = ig.connected && ig.links.size() + 1 == ig.cycles.size();
  return ig;
}

}  // namespace eulersafe
