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
#include <string>
#include <vector>

#include <json.hpp>

namespace qcpart {

/// A total assignment of n vertices (qubits) to k parts. Every part is
/// non-empty and every vertex is assigned exactly once; the constructor
/// throws std::invalid_argument otherwise.
class Partitioning {
 public:
  Partitioning(std::vector<int32_t> assignment, int k);

  static Partitioning single_part(int n);
  static Partitioning singletons(int n);
  /// parts[i] lists the vertices of part i; they must cover 0..n-1 disjointly.
  static Partitioning from_parts(const std::vector<std::vector<int>>& parts, int n);

  int k() const { return k_; }
  int num_vertices() const { return static_cast<int>(assignment_.size()); }
  int32_t part_of(int v) const { return assignment_[v]; }
  const std::vector<int32_t>& assignment() const { return assignment_; }

  std::vector<int> part_sizes() const;
  /// Vertices grouped by part, ascending within each part.
  std::vector<std::vector<int>> parts() const;

  bool operator==(const Partitioning&) const = default;

 private:
  std::vector<int32_t> assignment_;
  int k_;
};

/// {"k":..., "parts":[[...]...], "cut":...} with ascending vertex lists.
nlohmann::json partitioning_to_json(const Partitioning& partitioning, int64_t cut);

}  // namespace qcpart
