// Copyright 2026 The qcpart developers
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

#include "qcpart/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qcpart/bench.hpp"
#include "qcpart/circuit_json.hpp"
#include "qcpart/decompose.hpp"
#include "qcpart/dqc.hpp"
#include "qcpart/errors.hpp"
#include "qcpart/interaction_graph.hpp"
#include "qcpart/partitioner.hpp"
#include "qcpart/qft.hpp"
#include "qcpart/real_format.hpp"

namespace qcpart {
namespace {

constexpr uint64_t kDefaultSeed = 7;
constexpr int kDefaultRestarts = 20;

uint64_t default_seed() {
  if (const char* env = std::getenv("QCPART_SEED")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      throw std::invalid_argument("QCPART_SEED must be an unsigned integer");
    }
    return value;
  }
  return kDefaultSeed;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

Circuit load_circuit(const std::filesystem::path& path, const std::string& format) {
  std::string effective = format;
  if (effective.empty()) {
    effective = path.extension() == ".real" ? "real" : "json";
  }
  const std::string text = read_file(path);
  return effective == "real" ? parse_real(text, path.stem().string())
                             : parse_json(text);
}

struct ParseArgs {
  std::string file;
  std::string format;
};

int cmd_parse(const ParseArgs& args, std::ostream& out) {
  const Circuit circuit = load_circuit(args.file, args.format);
  if (!circuit.name().empty()) out << "name: " << circuit.name() << "\n";
  out << "qubits: " << circuit.num_qubits() << "\n";
  out << "gates: " << circuit.gates().size() << "\n";
  std::map<std::string_view, int> by_kind;
  for (const Gate& gate : circuit.gates()) ++by_kind[kind_name(gate.kind)];
  for (const auto& [kind, count] : by_kind) {
    out << "  " << kind << ": " << count << "\n";
  }
  out << "ok\n";
  return 0;
}

struct QftArgs {
  int n = 0;
  bool no_decompose = false;
};

int cmd_qft(const QftArgs& args, std::ostream& out) {
  out << write_json(generate_qft(args.n, !args.no_decompose));
  return 0;
}

struct GraphArgs {
  std::string file;
  bool decompose_first = false;
  std::string output;
};

int cmd_graph(const GraphArgs& args, std::ostream& out) {
  Circuit circuit = load_circuit(args.file, "");
  if (args.decompose_first) circuit = decompose(circuit);
  const std::string text = build_graph(circuit).to_json().dump(2) + "\n";
  if (args.output.empty()) {
    out << text;
  } else {
    write_file(args.output, text);
  }
  return 0;
}

struct PartitionArgs {
  std::string file;
  int k = 0;
  int restarts = kDefaultRestarts;
  std::optional<uint64_t> seed;
  bool decompose_first = false;
  std::string output;
};

int cmd_partition(const PartitionArgs& args, std::ostream& out) {
  Circuit circuit = load_circuit(args.file, "");
  if (args.decompose_first) circuit = decompose(circuit);
  const InteractionGraph graph = build_graph(circuit);
  const uint64_t seed = args.seed ? *args.seed : default_seed();

  const Partitioning partitioning = recursive_kway(graph, args.k, args.restarts, seed);
  const DistributedCircuit dqc = distribute(circuit, partitioning);

  out << "cut: " << graph.cut_weight(partitioning) << "\n";
  out << "global gates: " << dqc.metrics.global_gate_count << "\n";
  for (const auto& [part, qubits] : dqc.partitions) {
    out << "partition " << part << ":";
    for (const int q : qubits) out << " q" << q;
    out << "\n";
  }
  if (!args.output.empty()) {
    write_file(args.output, dqc_to_json(dqc).dump(2) + "\n");
  }
  return 0;
}

struct BenchArgs {
  std::vector<int> qft_sizes;
  std::string circuits_dir;
  std::vector<int> ks{2, 3, 4};
  std::vector<int> rs_reps{50, 100, 200};
  std::optional<uint64_t> seed;
  std::string output;
  std::string plot_output;
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<CircuitSource> sources;
  for (const int n : args.qft_sizes) sources.push_back(CircuitSource::qft(n));
  if (!args.circuits_dir.empty()) {
    std::vector<std::filesystem::path> files;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(args.circuits_dir, ec)) {
      const auto ext = entry.path().extension();
      if (entry.is_regular_file() && (ext == ".real" || ext == ".json")) {
        files.push_back(entry.path());
      }
    }
    if (ec) throw std::runtime_error("cannot read directory " + args.circuits_dir);
    std::sort(files.begin(), files.end());
    for (auto& file : files) sources.push_back(CircuitSource::file(std::move(file)));
  }

  const uint64_t seed = args.seed ? *args.seed : default_seed();
  const std::vector<BenchRow> rows =
      run_suite(sources, args.ks, args.rs_reps, seed, kDefaultRestarts);

  for (const BenchRow& row : rows) {
    if (!row.error.empty()) {
      err << "error: " << row.circuit_name << " (k=" << row.k << "): " << row.error
          << "\n";
      continue;
    }
    out << row.circuit_name << " k=" << row.k << " cut=" << row.proposed_cut
        << " improvement=" << row.improvement_pct << "%\n";
  }

  write_file(args.output, to_csv(rows));
  if (!args.plot_output.empty()) {
    write_file(args.plot_output, plot_data(rows).dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partitioning of quantum circuits for distributed execution"};
  app.name("qcpart");
  app.require_subcommand(1);

  ParseArgs parse_args;
  CLI::App* parse_cmd = app.add_subcommand("parse", "Validate a circuit file");
  parse_cmd->add_option("file", parse_args.file, "Circuit file (.real or .json)")
      ->required();
  parse_cmd->add_option("--format", parse_args.format, "Force the input format")
      ->check(CLI::IsMember({"real", "json"}));

  QftArgs qft_args;
  CLI::App* qft_cmd = app.add_subcommand("qft", "Emit a QFT circuit as JSON");
  qft_cmd->add_option("--n", qft_args.n, "Number of qubits")
      ->required()
      ->check(CLI::PositiveNumber);
  qft_cmd->add_flag("--no-decompose", qft_args.no_decompose,
                    "Keep controlled-phase and swap gates");

  GraphArgs graph_args;
  CLI::App* graph_cmd = app.add_subcommand("graph", "Build the interaction graph");
  graph_cmd->add_option("file", graph_args.file, "Circuit file (.real or .json)")
      ->required();
  graph_cmd->add_flag("--decompose", graph_args.decompose_first,
                      "Lower multi-qubit gates first");
  graph_cmd->add_option("-o,--output", graph_args.output, "Graph JSON output path");

  PartitionArgs partition_args;
  CLI::App* partition_cmd =
      app.add_subcommand("partition", "Partition a circuit into k parts");
  partition_cmd->add_option("file", partition_args.file, "Circuit file (.real or .json)")
      ->required();
  partition_cmd->add_option("-k", partition_args.k, "Number of parts")
      ->required()
      ->check(CLI::PositiveNumber);
  partition_cmd->add_option("--restarts", partition_args.restarts,
                            "Independent runs per bisection")
      ->check(CLI::PositiveNumber);
  partition_cmd->add_option("--seed", partition_args.seed, "Random seed");
  partition_cmd->add_flag("--decompose", partition_args.decompose_first,
                          "Lower multi-qubit gates first");
  partition_cmd->add_option("-o,--output", partition_args.output,
                            "Distributed-circuit JSON output path");

  BenchArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run the benchmark suite");
  bench_cmd->add_option("--qft", bench_args.qft_sizes, "QFT sizes to include")
      ->delimiter(',');
  bench_cmd->add_option("--circuits", bench_args.circuits_dir,
                        "Directory of .real/.json circuits to include");
  bench_cmd->add_option("--k", bench_args.ks, "Partition counts")->delimiter(',');
  bench_cmd->add_option("--rs-reps", bench_args.rs_reps,
                        "Random-baseline repetition counts")
      ->delimiter(',');
  bench_cmd->add_option("--seed", bench_args.seed, "Random seed");
  bench_cmd->add_option("-o,--output", bench_args.output, "CSV output path")
      ->required();
  bench_cmd->add_option("--plot-data", bench_args.plot_output,
                        "Plot-series JSON output path");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("qcpart");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.back()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*parse_cmd) return cmd_parse(parse_args, out);
    if (*qft_cmd) return cmd_qft(qft_args, out);
    if (*graph_cmd) return cmd_graph(graph_args, out);
    if (*partition_cmd) return cmd_partition(partition_args, out);
    if (*bench_cmd) return cmd_bench(bench_args, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace qcpart
