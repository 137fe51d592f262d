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

#include "qcpart/circuit.hpp"

#include <stdexcept>
#include <utility>

namespace qcpart {

Circuit::Circuit(int num_qubits, std::vector<Gate> gates, std::string name)
    : num_qubits_(num_qubits), gates_(std::move(gates)), name_(std::move(name)) {
  if (num_qubits_ < 1) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
  for (const Gate& gate : gates_) {
    validate_gate(gate, num_qubits_);
  }
}

}  // namespace qcpart
