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

#include "eulersafe/compare.hpp"

#include <algorithm>
#include <sstream>

#include "eulersafe/oracles.hpp"

namespace eulersafe {

namespace {

std::string format_walk(const std::vector<EdgeId>& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
  os << ']';
  return os.str();
}

CompareResult fail(std::string detail) {
  CompareResult r;
  r.status = CompareStatus::kFail;
  r.detail = std::move(detail);
  return r;
}

}  // namespace

std::vector<std::vector<EdgeId>> canonical_walks(const std::vector<Walk>& walks, bool circuit) {
  std::vector<std::vector<EdgeId>> out;
  out.reserve(walks.size());
  for (const Walk& w : walks) {
    if (circuit) {
      const Circuit c = Circuit(std::vector<EdgeId>(w.edges().begin(), w.edges().end())).canonical();
      out.emplace_back(c.edges().begin(), c.edges().end());
    } else {
      out.emplace_back(w.edges().begin(), w.edges().end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CompareResult compare_with_oracles(const Graph& g, const SafeWalkReport& candidate, bool candidate_unique,
                                   const CompareOptions& options) {
  CompareResult result;
  if (g.edge_count() > options.max_edges) {
    result.detail = "enumeration infeasible (" + std::to_string(g.edge_count()) + " edges > " +
                    std::to_string(options.max_edges) + ")";
    return result;
  }
  const BruteSafeWalks brute = brute_force_safe_walks(g, options.cap);
  if (brute.overflow) {
    result.detail = "enumeration infeasible (more than " + std::to_string(options.cap) + " circuits)";
    return result;
  }
  result.circuits = brute.circuits;

  const CountReport best = count_best(g);
  if (best.epsilon != brute.circuits) {
    return fail("BEST count " + best.epsilon.get_str() + " != enumerated " + std::to_string(brute.circuits));
  }
  if (candidate_unique != (brute.circuits == 1)) {
    return fail(std::string("uniqueness verdict ") + (candidate_unique ? "unique" : "not-unique") + " but " +
                std::to_string(brute.circuits) + " circuits enumerated");
  }
  if (candidate.unique_circuit != brute.unique_circuit) {
    return fail("report unique_circuit flag disagrees with enumeration");
  }

  std::size_t total = 0;
  std::vector<char> seen(g.edge_count(), 0);
  for (const Walk& w : candidate.walks) {
    total += w.length();
    for (EdgeId e : w.edges()) {
      if (e >= g.edge_count() || seen[e]) {
        return fail("walks do not partition the edge set (edge " + std::to_string(e) + ")");
      }
      seen[e] = 1;
    }
  }
  if (total != g.edge_count() || candidate.total_edge_length != total) {
    return fail("total walk length " + std::to_string(total) + " != |E| = " + std::to_string(g.edge_count()));
  }

  const auto got = canonical_walks(candidate.walks, candidate.unique_circuit);
  const auto want = canonical_walks(brute.walks, brute.unique_circuit);
  if (got != want) {
    std::size_t i = 0;
    while (i < got.size() && i < want.size() && got[i] == want[i]) ++i;
    std::string detail = "safe walk #" + std::to_string(i) + ": got ";
    detail += i < got.size() ? format_walk(got[i]) : "<none>";
    detail += ", brute force ";
    detail += i < want.size() ? format_walk(want[i]) : "<none>";
    return fail(detail);
  }

  // Transitions forced in every circuit, read off the brute-force walks.
  std::vector<EdgeId> forced(g.edge_count(), kNoEdge);
  for (const Walk& w : brute.walks) {
    for (std::size_t i = 0; i + 1 < w.length(); ++i) forced[w[i]] = w[i + 1];
    if (brute.unique_circuit) forced[w[w.length() - 1]] = w[0];
  }
  const SafetyIndex index(g);
  for (EdgeId e1 = 0; e1 < g.edge_count(); ++e1) {
    for (EdgeId e2 : g.out_edges(g.head(e1))) {
      const bool truth = forced[e1] == e2;
      const SafetyEvidence batch = index.query(e1, e2);
      const SafetyEvidence single = is_safe_pair(g, e1, e2);
      if (batch.safe != truth || single.safe != truth) {
        return fail("pair (" + std::to_string(e1) + "," + std::to_string(e2) + "): brute force says " +
                    (truth ? "safe" : "unsafe") + ", batch " + std::string(to_string(batch.reason)) + ", single " +
                    std::string(to_string(single.reason)));
      }
    }
  }

  result.pevzner_tree = pevzner_intersection_graph(g).tree;
  result.status = CompareStatus::kPass;
  return result;
}

CompareResult compare_with_oracles(const Graph& raw, const CompareOptions& options) {
  const Normalized norm = normalize(raw);
  const SafeWalkReport report = maximal_safe_walks(norm.graph);
  return compare_with_oracles(norm.graph, report, has_unique_eulerian_circuit(raw), options);
}

}  // namespace eulersafe
