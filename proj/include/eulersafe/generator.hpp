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

#include "eulersafe/graph.hpp"

namespace eulersafe {

struct GeneratorParams {
  std::size_t nodes = 0;
  std::size_t cycles = 0;
  std::uint64_t seed = 0;
  /// Upper bound on cycle length; 0 means `nodes`.
  std::size_t max_cycle_length = 0;
  std::size_t max_attempts = 1000;
};

/// Superposes `cycles` random simple directed cycles over nodes "v0".."v{n-1}".
/// Each cycle has a uniform length in [2, max_cycle_length] and visits a
/// uniformly random ordered subset of that size. Draws are repeated until the
/// result is weakly connected; throws std::runtime_error after max_attempts.
/// The output may contain parallel edges. Identical params give an identical
/// graph on every platform.
Graph generate_eulerian(const GeneratorParams& params);

}  // namespace eulersafe
