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

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "eulersafe/cli.hpp"

namespace cli = eulersafe::cli;

int main(int argc, char** argv) {
  CLI::App app{"Eulerian circuit uniqueness and maximal safe walks"};
  app.require_subcommand(1);

  std::string path;
  auto* check = app.add_subcommand("check", "Test whether the graph is Eulerian");
  check->add_option("graph", path, "Edge list file")->required();

  auto* unique = app.add_subcommand("unique", "Decide whether the Eulerian circuit is unique");
  unique->add_option("graph", path, "Edge list file")->required();

  std::string format = "text";
  auto* safe = app.add_subcommand("safe", "Report all maximal safe walks");
  safe->add_option("graph", path, "Edge list file")->required();
  safe->add_option("--format", format, "Output format (default: text)")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string method = "best";
  std::size_t cap = 1'000'000;
  auto* count = app.add_subcommand("count", "Count Eulerian circuits up to rotation");
  count->add_option("graph", path, "Edge list file")->required();
  count->add_option("--method", method, "Counting method (default: best)")
      ->check(CLI::IsMember({"best", "enumerate"}));
  count->add_option("--cap", cap, "Enumeration limit")->check(CLI::PositiveNumber);

  eulersafe::CompareOptions compare_options;
  bool inject_fault = false;
  auto* compare = app.add_subcommand("compare", "Cross-check the linear-time results against the oracles");
  compare->add_option("graph", path, "Edge list file")->required();
  compare->add_option("--max-edges", compare_options.max_edges, "Skip larger graphs");
  compare->add_option("--cap", compare_options.cap, "Enumeration limit")->check(CLI::PositiveNumber);
  compare->add_flag("--inject-fault", inject_fault, "Corrupt the report before comparing");

  eulersafe::GeneratorParams gen_params;
  auto* gen = app.add_subcommand("gen", "Emit a random Eulerian multigraph as an edge list");
  gen->add_option("nodes", gen_params.nodes, "Node count")->required();
  gen->add_option("cycles", gen_params.cycles, "Number of superposed cycles")->required();
  gen->add_option("--seed", gen_params.seed, "Random seed");
  gen->add_option("--max-cycle-length", gen_params.max_cycle_length, "Longest cycle (default: node count)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitInputError;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*check) return cli::cmd_check(path, out, err);
  if (*unique) return cli::cmd_unique(path, out, err);
  if (*safe) {
    const auto fmt = format == "structured" ? cli::OutputFormat::kStructured : cli::OutputFormat::kText;
    return cli::cmd_safe(path, fmt, out, err);
  }
  if (*count) {
    const auto how = method == "enumerate" ? cli::CountMethod::kEnumerate : cli::CountMethod::kBest;
    return cli::cmd_count(path, how, cap, out, err);
  }
  if (*compare) return cli::cmd_oracle_compare(path, compare_options, inject_fault, out, err);
  if (*gen) return cli::cmd_gen(gen_params, out, err);
  return cli::kExitInputError;
}
