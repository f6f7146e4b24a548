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
#include <string>
#include <vector>

#include "eulersafe/graph.hpp"
#include "eulersafe/safety.hpp"

namespace eulersafe {

struct CompareOptions {
  /// Graphs with more edges (after normalization) are skipped.
  std::size_t max_edges = 40;
  /// Circuit enumeration budget; exceeding it also skips.
  std::size_t cap = 1'000'000;
};

enum class CompareStatus { kPass, kFail, kSkipped };

struct CompareResult {
  CompareStatus status = CompareStatus::kSkipped;
  /// First divergence for kFail, the reason for kSkipped.
  std::string detail;
  std::size_t circuits = 0;
  /// Intersection-graph tree test; advisory only, never fails the comparison.
  bool pevzner_tree = false;
};

/// Canonical multiset form: circuit-shaped walks rotated to their smallest
/// edge id, the whole list sorted.
std::vector<std::vector<EdgeId>> canonical_walks(const std::vector<Walk>& walks, bool circuit);

/// Checks a candidate safe-walk report and uniqueness verdict for a
/// normalized Eulerian graph against enumeration, BEST counting and the
/// brute-force safe walks, plus both pair-query routes against the
/// brute-force transitions.
CompareResult compare_with_oracles(const Graph& g, const SafeWalkReport& candidate, bool candidate_unique,
                                   const CompareOptions& options = {});

/// Normalizes `raw`, computes the linear-time results and compares them.
CompareResult compare_with_oracles(const Graph& raw, const CompareOptions& options = {});

}  // namespace eulersafe
