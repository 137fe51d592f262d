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

#include "qcpart/interaction_graph.hpp"

#include <cassert>
#include <stdexcept>

#include "qcpart/kernels.hpp"

namespace qcpart {

InteractionGraph::InteractionGraph(int n)
    : n_(n), stride_(kern::padded_stride(n)),
      w_(static_cast<size_t>(n) * stride_, 0) {}

void InteractionGraph::add(int u, int v) {
  w_[static_cast<size_t>(u) * stride_ + v] += 1;
  w_[static_cast<size_t>(v) * stride_ + u] += 1;
}

int64_t InteractionGraph::total_weight() const {
  int64_t doubled = 0;
  for (const int32_t w : w_) doubled += w;
  return doubled / 2;
}

int64_t InteractionGraph::cut_weight(const Partitioning& partitioning) const {
  if (partitioning.num_vertices() != n_) {
    throw std::invalid_argument("partitioning covers " +
                                std::to_string(partitioning.num_vertices()) +
                                " vertices, graph has " + std::to_string(n_));
  }
  std::vector<int32_t> part(static_cast<size_t>(stride_), -1);
  for (int v = 0; v < n_; ++v) part[v] = partitioning.part_of(v);
  const int64_t cut = kern::active().cut_weight(w_.data(), n_, stride_, part.data());
#ifndef NDEBUG
  int64_t internal = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (partitioning.part_of(u) == partitioning.part_of(v)) internal += weight(u, v);
    }
  }
  assert(cut + internal == total_weight());
#endif
  return cut;
}

std::vector<InteractionGraph::Edge> InteractionGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (const int32_t w = weight(u, v); w > 0) {
        out.push_back(Edge{u, v, w});
      }
    }
  }
  return out;
}

nlohmann::json InteractionGraph::to_json() const {
  nlohmann::json edge_list = nlohmann::json::array();
  for (const Edge& e : edges()) {
    edge_list.push_back({{"u", e.u}, {"v", e.v}, {"w", e.w}});
  }
  return nlohmann::json{{"n", n_}, {"edges", std::move(edge_list)}};
}

InteractionGraph build_graph(const Circuit& circuit) {
  InteractionGraph graph(circuit.num_qubits());
  for (const Gate& gate : circuit.gates()) {
    const auto& q = gate.operands;
    switch (q.size()) {
      case 1:
        break;
      case 2:
        graph.add(q[0], q[1]);
        break;
      case 3:
        graph.add(q[0], q[1]);
        graph.add(q[0], q[2]);
        graph.add(q[1], q[2]);
        break;
      default:
        throw std::invalid_argument("gate arity out of range");
    }
  }
  return graph;
}

}  // namespace qcpart
