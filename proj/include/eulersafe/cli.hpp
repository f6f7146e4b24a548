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
#include <filesystem>
#include <iosfwd>

#include "eulersafe/compare.hpp"
#include "eulersafe/generator.hpp"
#include "eulersafe/graph.hpp"
#include "eulersafe/safety.hpp"

namespace eulersafe::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

enum class OutputFormat { kText, kStructured };
enum class CountMethod { kBest, kEnumerate };

int cmd_check(const std::filesystem::path& path, std::ostream& out, std::ostream& err);
int cmd_unique(const std::filesystem::path& path, std::ostream& out, std::ostream& err);
int cmd_safe(const std::filesystem::path& path, OutputFormat format, std::ostream& out, std::ostream& err);
int cmd_count(const std::filesystem::path& path, CountMethod method, std::size_t cap, std::ostream& out,
              std::ostream& err);
/// `inject_fault` corrupts the linear-time report before comparing; used to
/// check that the comparison actually detects divergences.
int cmd_oracle_compare(const std::filesystem::path& path, const CompareOptions& options, bool inject_fault,
                       std::ostream& out, std::ostream& err);
int cmd_gen(const GeneratorParams& params, std::ostream& out, std::ostream& err);

/// Header line, then one line per walk: node labels joined by " -> ",
/// followed by the edge ids in brackets.
void write_text_report(const Graph& g, const SafeWalkReport& report, std::ostream& out);
/// JSON lines: one header record, then one record per walk.
void write_structured_report(const Graph& g, const SafeWalkReport& report, std::ostream& out);

}  // namespace eulersafe::cli
