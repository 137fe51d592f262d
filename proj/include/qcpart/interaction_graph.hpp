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
#include <vector>

#include <json.hpp>

#include "qcpart/circuit.hpp"
#include "qcpart/partitioning.hpp"

namespace qcpart {

/// Undirected weighted graph over the qubits of a circuit. The weight of
/// (u, v) counts the multi-qubit gates coupling that pair: +1 per 2-qubit
/// gate, and +1 on each of the three pairs of a 3-qubit gate; 1-qubit gates
/// contribute nothing. Hence total_weight == sum over gates of C(arity, 2).
/// Stored as a dense symmetric matrix (zero diagonal, padded rows) so the
/// partitioning kernels can run vectorized. Immutable after build_graph.
class InteractionGraph {
 public:
  int num_vertices() const { return n_; }
  int32_t weight(int u, int v) const { return w_[static_cast<size_t>(u) * stride_ + v]; }
  int64_t total_weight() const;

  /// Weight crossing the given partitioning. Throws std::invalid_argument on
  /// a vertex-count mismatch. Debug builds double-check the complementary
  /// identity cut + internal == total.
  int64_t cut_weight(const Partitioning& partitioning) const;

  struct Edge {
    int u, v;  // u < v
    int32_t w;
    bool operator==(const Edge&) const = default;
  };
  /// Present edges (w >= 1), sorted by (u, v).
  std::vector<Edge> edges() const;

  /// {"n":..., "edges":[{"u":..,"v":..,"w":..}, ...]}, u < v, lexicographic.
  nlohmann::json to_json() const;

  // Raw matrix access for the kernels.
  const int32_t* row(int v) const { return w_.data() + static_cast<size_t>(v) * stride_; }
  int stride() const { return stride_; }

  friend InteractionGraph build_graph(const Circuit& circuit);

 private:
  explicit InteractionGraph(int n);
  void add(int u, int v);

  int n_;
  int stride_;
  std::vector<int32_t> w_;
};

InteractionGraph build_graph(const Circuit& circuit);

}  // namespace qcpart
