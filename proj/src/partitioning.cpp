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

#include "qcpart/partitioning.hpp"

#include <stdexcept>
#include <utility>

namespace qcpart {

Partitioning::Partitioning(std::vector<int32_t> assignment, int k)
    : assignment_(std::move(assignment)), k_(k) {
  if (k_ < 1) throw std::invalid_argument("need at least one part");
  if (assignment_.empty()) throw std::invalid_argument("no vertices to assign");
  std::vector<bool> used(static_cast<size_t>(k_), false);
  for (const int32_t p : assignment_) {
    if (p < 0 || p >= k_) {
      throw std::invalid_argument("part id " + std::to_string(p) +
                                  " out of range for k=" + std::to_string(k_));
    }
    used[p] = true;
  }
  for (int p = 0; p < k_; ++p) {
    if (!used[p]) {
      throw std::invalid_argument("part " + std::to_string(p) + " is empty");
    }
  }
}

Partitioning Partitioning::single_part(int n) {
  return Partitioning(std::vector<int32_t>(static_cast<size_t>(n), 0), 1);
}

Partitioning Partitioning::singletons(int n) {
  std::vector<int32_t> assignment(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) assignment[v] = v;
  return Partitioning(std::move(assignment), n);
}

Partitioning Partitioning::from_parts(const std::vector<std::vector<int>>& parts, int n) {
  std::vector<int32_t> assignment(static_cast<size_t>(n), -1);
  for (size_t p = 0; p < parts.size(); ++p) {
    for (const int v : parts[p]) {
      if (v < 0 || v >= n) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
      }
      if (assignment[v] != -1) {
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " assigned to two parts");
      }
      assignment[v] = static_cast<int32_t>(p);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (assignment[v] == -1) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " unassigned");
    }
  }
  return Partitioning(std::move(assignment), static_cast<int>(parts.size()));
}

std::vector<int> Partitioning::part_sizes() const {
  std::vector<int> sizes(static_cast<size_t>(k_), 0);
  for (const int32_t p : assignment_) ++sizes[p];
  return sizes;
}

std::vector<std::vector<int>> Partitioning::parts() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(k_));
  for (size_t v = 0; v < assignment_.size(); ++v) {
    out[assignment_[v]].push_back(static_cast<int>(v));
  }
  return out;
}

nlohmann::json partitioning_to_json(const Partitioning& partitioning, int64_t cut) {
  return nlohmann::json{
      {"k", partitioning.k()}, {"parts", partitioning.parts()}, {"cut", cut}};
}

}  // namespace qcpart
