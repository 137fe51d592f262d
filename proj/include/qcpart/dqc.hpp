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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcpart/circuit.hpp"
#include "qcpart/partitioning.hpp"

namespace qcpart {

// Communication metrics of a partitioned circuit. teleportation_cost is the
// crossing-edge weight of the interaction graph; global_gate_count counts
// gates spanning >= 2 parts. The two coincide on circuits of 1- and 2-qubit
// gates; a 3-qubit gate split 2|1 counts once as a global gate but
// contributes 2 crossing edges (1|1|1 contributes 3), so both numbers are
// always reported.
struct CostReport {
  int64_t global_gate_count = 0;
  int64_t teleportation_cost = 0;
  std::map<std::pair<int, int>, int64_t> per_pair_traffic;  // (p, q) with p < q
  std::vector<int> part_sizes;
};

struct GatePlacement {
  bool global = false;
  std::vector<int> parts;  // parts touched, ascending
};

/// A circuit distributed over k parts: the per-part qubit lists, the original
/// gate schedule annotated with locality, and the cost metrics.
struct DistributedCircuit {
  Circuit circuit;
  std::vector<std::pair<int, std::vector<int>>> partitions;  // (part id, qubits asc)
  std::vector<GatePlacement> schedule;                       // parallel to circuit.gates()
  CostReport metrics;
};

/// Classifies every gate against the partitioning and computes the metrics.
/// Throws std::invalid_argument when qubit counts disagree.
DistributedCircuit distribute(const Circuit& circuit, const Partitioning& partitioning);

// Percentage reduction of `proposed` against `baseline`, rounded to the
// nearest integer (halves away from zero). (0, 0) gives 0; a zero baseline
// with a nonzero proposal has no defined improvement and throws
// std::invalid_argument.
int improvement_percent(int64_t proposed, double baseline);

nlohmann::json dqc_to_json(const DistributedCircuit& dqc);

/// Plain-text rendering: one section per partition, then the annotated
/// schedule and the metrics.
std::string render_text(const DistributedCircuit& dqc);

}  // namespace qcpart
