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

#include <string>
#include <utility>
#include <vector>

#include "qcpart/gate.hpp"

namespace qcpart {

/// A monolithic quantum circuit: a qubit count and an ordered gate sequence.
/// Immutable after construction (safe to share across threads); the
/// constructor validates every gate and throws std::invalid_argument on the
/// first violation. Gate order is preserved exactly as given.
class Circuit {
 public:
  Circuit(int num_qubits, std::vector<Gate> gates, std::string name = "");

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::string& name() const { return name_; }

  bool operator==(const Circuit&) const = default;

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
  std::string name_;
};

}  // namespace qcpart
