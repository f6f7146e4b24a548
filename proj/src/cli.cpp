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

#include "eulersafe/cli.hpp"

#include <json.hpp>

#include <ostream>
#include <stdexcept>

#include "eulersafe/error.hpp"
#include "eulersafe/oracles.hpp"

namespace eulersafe::cli {

namespace {

using Json = nlohmann::ordered_json;

// Loads the graph or reports why not. Returns false after writing to err.
bool load(const std::filesystem::path& path, Graph& g, std::ostream& err) {
  try {
    g = read_edge_list_file(path);
    return true;
  } catch (const ParseError& e) {
    err << "error: " << path.string() << ": " << e.what() << '\n';
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
  }
  return false;
}

bool load_eulerian(const std::filesystem::path& path, Graph& g, std::ostream& err) {
  if (!load(path, g, err)) return false;
  if (const EulerCheck check = is_eulerian(g); !check) {
    err << "error: graph is not Eulerian: " << check.describe(g) << '\n';
    return false;
  }
  return true;
}

}  // namespace

void write_text_report(const Graph& g, const SafeWalkReport& report, std::ostream& out) {
  out << "edges=" << g.edge_count() << " walks=" << report.walks.size() << " total_length=" << report.total_edge_length
      << " unique_circuit=" << (report.unique_circuit ? "true" : "false") << '\n';
  for (const Walk& w : report.walks) {
    const auto nodes = w.nodes(g);
    for (std::size_t i = 0; i < nodes.size(); ++i) out << (i ? " -> " : "") << g.label(nodes[i]);
    out << "  [";
    for (std::size_t i = 0; i < w.length(); ++i) out << (i ? " " : "") << w[i];
    out << "]\n";
  }
}

void write_structured_report(const Graph& g, const SafeWalkReport& report, std::ostream& out) {
  Json header;
  header["record"] = "header";
  header["edges"] = g.edge_count();
  header["walks"] = report.walks.size();
  header["total_length"] = report.total_edge_length;
  header["unique_circuit"] = report.unique_circuit;
  out << header.dump() << '\n';
  for (std::size_t i = 0; i < report.walks.size(); ++i) {
    const Walk& w = report.walks[i];
    Json record;
    record["record"] = "walk";
    record["index"] = i;
    record["circuit"] = report.unique_circuit;
    record["length"] = w.length();
    Json nodes = Json::array();
    for (NodeId v : w.nodes(g)) nodes.push_back(g.label(v));
    record["nodes"] = std::move(nodes);
    record["edge_ids"] = std::vector<EdgeId>(w.edges().begin(), w.edges().end());
    out << record.dump() << '\n';
  }
}

int cmd_check(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
  Graph g;
  if (!load(path, g, err)) return kExitInputError;
  const EulerCheck check = is_eulerian(g);
  out << check.describe(g) << '\n';
  return check ? kExitOk : kExitNegative;
}

int cmd_unique(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
  Graph g;
  if (!load_eulerian(path, g, err)) return kExitInputError;
  const bool unique = has_unique_eulerian_circuit(g);
  out << (unique ? "unique" : "not-unique") << '\n';
  return unique ? kExitOk : kExitNegative;
}

int cmd_safe(const std::filesystem::path& path, OutputFormat format, std::ostream& out, std::ostream& err) {
  Graph g;
  if (!load_eulerian(path, g, err)) return kExitInputError;
  const SafeWalkReport report = analyze_safe_walks(g);
  if (format == OutputFormat::kStructured) {
    write_structured_report(g, report, out);
  } else {
    write_text_report(g, report, out);
  }
  return kExitOk;
}

int cmd_count(const std::filesystem::path& path, CountMethod method, std::size_t cap, std::ostream& out,
              std::ostream& err) {
  Graph g;
  if (!load_eulerian(path, g, err)) return kExitInputError;
  if (method == CountMethod::kBest) {
    out << count_best(g).epsilon.get_str() << '\n';
    return kExitOk;
  }
  bool overflow = false;
  const std::size_t found = for_each_eulerian_circuit(g, cap, [](std::span<const EdgeId>) {}, &overflow);
  if (overflow) {
    out << ">=" << cap << '\n';
    err << "enumeration cap of " << cap << " circuits exceeded\n";
    return kExitNegative;
  }
  out << found << '\n';
  return kExitOk;
}

int cmd_oracle_compare(const std::filesystem::path& path, const CompareOptions& options, bool inject_fault,
                       std::ostream& out, std::ostream& err) {
  Graph raw;
  if (!load_eulerian(path, raw, err)) return kExitInputError;
  const Normalized norm = normalize(raw);
  SafeWalkReport report = maximal_safe_walks(norm.graph);
  if (inject_fault) {
    // Split the first walk, or glue the first two together.
    auto& walks = report.walks;
    if (walks.front().length() >= 2) {
      const auto edges = walks.front().edges();
      std::vector<EdgeId> head(edges.begin(), edges.end() - 1);
      walks.emplace_back(std::vector<EdgeId>{edges.back()});
      walks.front() = Walk(std::move(head));
    } else if (walks.size() >= 2) {
      std::vector<EdgeId> glued(walks[0].edges().begin(), walks[0].edges().end());
      glued.insert(glued.end(), walks[1].edges().begin(), walks[1].edges().end());
      walks.erase(walks.begin(), walks.begin() + 2);
      walks.emplace_back(std::move(glued));
    }
    report.unique_circuit = false;
  }
  const CompareResult result = compare_with_oracles(norm.graph, report, has_unique_eulerian_circuit(raw), options);
  switch (result.status) {
    case CompareStatus::kPass:
      out << "PASS circuits=" << result.circuits << " pevzner_tree=" << (result.pevzner_tree ? "true" : "false")
          << '\n';
      return kExitOk;
    case CompareStatus::kFail:
      out << "FAIL " << result.detail << '\n';
      return kExitNegative;
    case CompareStatus::kSkipped:
      out << "skipped: " << result.detail << '\n';
      return kExitOk;
  }
  return kExitNegative;
}

int cmd_gen(const GeneratorParams& params, std::ostream& out, std::ostream& err) {
  try {
    out << to_edge_list(generate_eulerian(params));
    return kExitOk;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace eulersafe::cli
