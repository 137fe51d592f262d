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

#include "qcpart/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qcpart/circuit_json.hpp"
#include "qcpart/decompose.hpp"
#include "qcpart/dqc.hpp"
#include "qcpart/interaction_graph.hpp"
#include "qcpart/partitioner.hpp"
#include "qcpart/qft.hpp"
#include "qcpart/real_format.hpp"

namespace qcpart {
namespace {

Circuit load_source(const CircuitSource& source) {
  if (const int* n = std::get_if<int>(&source.source)) {
    return generate_qft(*n, source.decompose);
  }
  const auto& path = std::get<std::filesystem::path>(source.source);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Circuit circuit = path.extension() == ".real"
                        ? parse_real(buffer.str(), path.stem().string())
                        : parse_json(buffer.str());
  return source.decompose ? decompose(circuit) : circuit;
}

std::string round_cell(double value) {
  return std::to_string(std::llround(value));
}

}  // namespace

CircuitSource CircuitSource::qft(int n) {
  return CircuitSource{"qft" + std::to_string(n), n, true};
}

CircuitSource CircuitSource::file(std::filesystem::path path, bool decompose) {
  std::string name = path.stem().string();
  return CircuitSource{std::move(name), std::move(path), decompose};
}

std::vector<BenchRow> run_suite(std::span<const CircuitSource> circuits,
                                std::span<const int> ks, std::span<const int> rs_reps,
                                uint64_t seed, int restarts) {
  if (rs_reps.empty()) throw std::invalid_argument("need at least one repetition count");
  const int max_reps = *std::max_element(rs_reps.begin(), rs_reps.end());

  std::vector<BenchRow> rows;
  rows.reserve(circuits.size() * ks.size());
  for (size_t ci = 0; ci < circuits.size(); ++ci) {
    const CircuitSource& source = circuits[ci];
    std::optional<Circuit> circuit;
    std::string load_error;
    try {
      circuit = load_source(source);
    } catch (const std::exception& e) {
      load_error = e.what();
    }
    std::optional<InteractionGraph> graph;
    if (circuit) graph.emplace(build_graph(*circuit));

    for (size_t kj = 0; kj < ks.size(); ++kj) {
      const int k = ks[kj];
      BenchRow row;
      row.circuit_name = source.name;
      row.k = k;
      if (!circuit) {
        row.error = load_error;
        rows.push_back(std::move(row));
        continue;
      }
      row.num_qubits = circuit->num_qubits();
      if (k < 1 || k > row.num_qubits) {
        row.error = "k=" + std::to_string(k) + " is invalid for " +
                    std::to_string(row.num_qubits) + " qubits";
        rows.push_back(std::move(row));
        continue;
      }

      // Two private streams per row: one for the partitioner restarts, one
      // shared by every baseline column so RS(50) is a prefix of RS(200).
      const uint64_t row_stream = (static_cast<uint64_t>(ci) << 16) | (kj << 1);
      const uint64_t kl_seed = Rng::derive(seed, row_stream);
      const uint64_t rs_seed = Rng::derive(seed, row_stream | 1);

      const auto t0 = std::chrono::steady_clock::now();
      Partitioning partitioning = recursive_kway(*graph, k, restarts, kl_seed);
      row.proposed_cut = graph->cut_weight(partitioning);
      for (const int reps : rs_reps) {
        row.rs_means[reps] = random_baseline(*graph, k, reps, rs_seed);
      }
      const auto t1 = std::chrono::steady_clock::now();

      row.improvement_pct =
          improvement_percent(row.proposed_cut, row.rs_means.at(max_reps));
      row.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      row.partitioning = std::move(partitioning);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string to_csv(std::span<const BenchRow> rows) {
  static constexpr int kColumns[] = {50, 100, 200};
  std::string out = "circuit,qubits,k,proposed,rs50,rs100,rs200,improvement_pct\n";
  for (const BenchRow& row : rows) {
    if (!row.error.empty()) continue;
    out += row.circuit_name;
    out += ',' + std::to_string(row.num_qubits);
    out += ',' + std::to_string(row.k);
    out += ',' + std::to_string(row.proposed_cut);
    for (const int reps : kColumns) {
      out += ',';
      if (const auto it = row.rs_means.find(reps); it != row.rs_means.end()) {
        out += round_cell(it->second);
      }
    }
    out += ',' + std::to_string(row.improvement_pct);
    out += '\n';
  }
  return out;
}

nlohmann::json plot_data(std::span<const BenchRow> rows) {
  // Proposed-vs-baseline series grouped by k, in first-seen k order.
  nlohmann::json by_k = nlohmann::json::array();
  std::vector<int> seen_ks;
  for (const BenchRow& row : rows) {
    if (!row.error.empty()) continue;
    if (std::find(seen_ks.begin(), seen_ks.end(), row.k) == seen_ks.end()) {
      seen_ks.push_back(row.k);
    }
  }
  for (const int k : seen_ks) {
    nlohmann::json series{{"k", k},
                          {"circuits", nlohmann::json::array()},
                          {"proposed", nlohmann::json::array()},
                          {"baseline", nlohmann::json::array()}};
    for (const BenchRow& row : rows) {
      if (!row.error.empty() || row.k != k) continue;
      series["circuits"].push_back(row.circuit_name);
      series["proposed"].push_back(row.proposed_cut);
      nlohmann::json means = nlohmann::json::object();
      for (const auto& [reps, mean] : row.rs_means) {
        means[std::to_string(reps)] = mean;
      }
      series["baseline"].push_back(std::move(means));
    }
    by_k.push_back(std::move(series));
  }

  nlohmann::json improvement = nlohmann::json::array();
  for (const BenchRow& row : rows) {
    if (!row.error.empty()) continue;
    improvement.push_back({{"circuit", row.circuit_name},
                           {"qubits", row.num_qubits},
                           {"k", row.k},
                           {"improvement_pct", row.improvement_pct}});
  }

  return nlohmann::json{{"cut_by_k", std::move(by_k)},
                        {"improvement", std::move(improvement)}};
}

}  // namespace qcpart
