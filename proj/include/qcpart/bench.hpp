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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qcpart/partitioning.hpp"

namespace qcpart {

/// One benchmark input: a generated QFT (qubit count) or a circuit file
/// (.real or .json by extension). decompose lowers it before graph building.
struct CircuitSource {
  std::string name;
  std::variant<int, std::filesystem::path> source;
  bool decompose = true;

  static CircuitSource qft(int n);
  static CircuitSource file(std::filesystem::path path, bool decompose = true);
};

/// One (circuit, k) result row. rs_means maps repetition count -> mean random
/// cut; improvement_pct compares proposed_cut against the 200-rep mean (or
/// the largest requested repetition count). On load failure only `error` is
/// set and the row is skipped in reports.
struct BenchRow {
  std::string circuit_name;
  int num_qubits = 0;
  int k = 0;
  int64_t proposed_cut = 0;
  std::map<int, double> rs_means;
  int improvement_pct = 0;
  double wall_time_ms = 0.0;
  std::optional<Partitioning> partitioning;
  std::string error;
};

// Runs the full comparison for every (circuit, k): decompose if requested,
// build the interaction graph, recursive K-L with `restarts`, then the random
// baseline at each repetition count. Rows come back ordered (circuit, k) and
// are deterministic for a fixed seed; a circuit that fails to load yields one
// error row per k instead of aborting the suite.
std::vector<BenchRow> run_suite(std::span<const CircuitSource> circuits,
                                std::span<const int> ks, std::span<const int> rs_reps,
                                uint64_t seed, int restarts);

// CSV with the fixed header
//   circuit,qubits,k,proposed,rs50,rs100,rs200,improvement_pct
// RS cells are rounded to the nearest integer (halves away from zero); cells
// for repetition counts that were not requested stay empty. Error rows are
// omitted. Byte-identical across equal-seed runs.
std::string to_csv(std::span<const BenchRow> rows);

/// Plot-ready series: proposed vs RS(200) per (circuit, k), and the
/// improvement percentages.
nlohmann::json plot_data(std::span<const BenchRow> rows);

}  // namespace qcpart
