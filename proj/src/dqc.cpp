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

#include "qcpart/dqc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcpart {

DistributedCircuit distribute(const Circuit& circuit, const Partitioning& partitioning) {
  if (partitioning.num_vertices() != circuit.num_qubits()) {
    throw std::invalid_argument("partitioning covers " +
                                std::to_string(partitioning.num_vertices()) +
                                " qubits, circuit has " +
                                std::to_string(circuit.num_qubits()));
  }

  DistributedCircuit dqc{circuit, {}, {}, {}};
  const auto parts = partitioning.parts();
  for (int p = 0; p < partitioning.k(); ++p) {
    dqc.partitions.emplace_back(p, parts[p]);
  }
  dqc.metrics.part_sizes = partitioning.part_sizes();

  dqc.schedule.reserve(circuit.gates().size());
  for (const Gate& gate : circuit.gates()) {
    GatePlacement placement;
    for (const int q : gate.operands) {
      const int p = partitioning.part_of(q);
      if (std::find(placement.parts.begin(), placement.parts.end(), p) ==
          placement.parts.end()) {
        placement.parts.push_back(p);
      }
    }
    std::sort(placement.parts.begin(), placement.parts.end());
    placement.global = placement.parts.size() > 1;

    if (placement.global) {
      dqc.metrics.global_gate_count += 1;
      // Crossing pairs of operands, weighted once each: this reproduces the
      // interaction-graph cut when summed over the schedule.
      const auto& q = gate.operands;
      for (size_t i = 0; i < q.size(); ++i) {
        for (size_t j = i + 1; j < q.size(); ++j) {
          int pi = partitioning.part_of(q[i]);
          int pj = partitioning.part_of(q[j]);
          if (pi == pj) continue;
          if (pi > pj) std::swap(pi, pj);
          dqc.metrics.teleportation_cost += 1;
          dqc.metrics.per_pair_traffic[{pi, pj}] += 1;
        }
      }
    }
    dqc.schedule.push_back(std::move(placement));
  }
  return dqc;
}

int improvement_percent(int64_t proposed, double baseline) {
  if (baseline == 0.0) {
    if (proposed == 0) return 0;
    throw std::invalid_argument("no improvement is defined against a zero baseline");
  }
  const double ratio = 100.0 * (baseline - static_cast<double>(proposed)) / baseline;
  return static_cast<int>(std::llround(ratio));
}

nlohmann::json dqc_to_json(const DistributedCircuit& dqc) {
  nlohmann::json partitions = nlohmann::json::array();
  for (const auto& [part, qubits] : dqc.partitions) {
    partitions.push_back({{"part", part}, {"qubits", qubits}});
  }

  nlohmann::json schedule = nlohmann::json::array();
  for (size_t g = 0; g < dqc.schedule.size(); ++g) {
    const Gate& gate = dqc.circuit.gates()[g];
    nlohmann::json node{{"kind", std::string(kind_name(gate.kind))},
                        {"operands", gate.operands},
                        {"global", dqc.schedule[g].global},
                        {"parts", dqc.schedule[g].parts}};
    if (gate.angle) node["angle"] = *gate.angle;
    schedule.push_back(std::move(node));
  }

  nlohmann::json traffic = nlohmann::json::array();
  for (const auto& [pair, weight] : dqc.metrics.per_pair_traffic) {
    traffic.push_back({{"parts", {pair.first, pair.second}}, {"weight", weight}});
  }
  nlohmann::json metrics{{"global_gates", dqc.metrics.global_gate_count},
                         {"teleportations", dqc.metrics.teleportation_cost},
                         {"part_sizes", dqc.metrics.part_sizes},
                         {"traffic", std::move(traffic)}};

  nlohmann::json doc{{"partitions", std::move(partitions)},
                     {"schedule", std::move(schedule)},
                     {"metrics", std::move(metrics)}};
  if (!dqc.circuit.name().empty()) doc["name"] = dqc.circuit.name();
  return doc;
}

std::string render_text(const DistributedCircuit& dqc) {
  std::ostringstream out;
  if (!dqc.circuit.name().empty()) {
    out << dqc.circuit.name() << "\n";
  }
  for (const auto& [part, qubits] : dqc.partitions) {
    out << "partition " << part << ":";
    for (const int q : qubits) out << " q" << q;
    out << "\n";
  }
  out << "schedule:\n";
  for (size_t g = 0; g < dqc.schedule.size(); ++g) {
    const Gate& gate = dqc.circuit.gates()[g];
    out << "  " << kind_name(gate.kind);
    for (const int q : gate.operands) out << " q" << q;
    if (gate.angle) out << " angle=" << *gate.angle;
    if (dqc.schedule[g].global) {
      out << "  [global:";
      for (size_t i = 0; i < dqc.schedule[g].parts.size(); ++i) {
        out << (i ? "," : " ") << dqc.schedule[g].parts[i];
      }
      out << "]";
    }
    out << "\n";
  }
  out << "global gates: " << dqc.metrics.global_gate_count << "\n";
  out << "teleportations: " << dqc.metrics.teleportation_cost << "\n";
  return out.str();
}

}  // namespace qcpart
