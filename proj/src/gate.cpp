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

#include "qcpart/gate.hpp"

#include <sstream>
#include <stdexcept>

namespace qcpart {

int arity(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Rz:
    case GateKind::Generic1:
      return 1;
    case GateKind::Cnot:
    case GateKind::Cp:
    case GateKind::Swap:
    case GateKind::Generic2:
      return 2;
    case GateKind::Toffoli:
    case GateKind::Fredkin:
    case GateKind::Generic3:
      return 3;
  }
  throw std::invalid_argument("unknown gate kind");
}

bool is_parameterized(GateKind kind) {
  return kind == GateKind::Rz || kind == GateKind::Cp;
}

const char* kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Rz: return "rz";
    case GateKind::Generic1: return "g1";
    case GateKind::Cnot: return "cnot";
    case GateKind::Cp: return "cp";
    case GateKind::Swap: return "swap";
    case GateKind::Generic2: return "g2";
    case GateKind::Toffoli: return "toffoli";
    case GateKind::Fredkin: return "fredkin";
    case GateKind::Generic3: return "g3";
  }
  throw std::invalid_argument("unknown gate kind");
}

std::optional<GateKind> kind_from_name(const std::string& name) {
  if (name == "h") return GateKind::H;
  if (name == "x") return GateKind::X;
  if (name == "rz") return GateKind::Rz;
  if (name == "g1") return GateKind::Generic1;
  if (name == "cnot") return GateKind::Cnot;
  if (name == "cp") return GateKind::Cp;
  if (name == "swap") return GateKind::Swap;
  if (name == "g2") return GateKind::Generic2;
  if (name == "toffoli") return GateKind::Toffoli;
  if (name == "fredkin") return GateKind::Fredkin;
  if (name == "g3") return GateKind::Generic3;
  return std::nullopt;
}

void validate_gate(const Gate& gate, int num_qubits) {
  const int want = arity(gate.kind);
  if (static_cast<int>(gate.operands.size()) != want) {
    std::ostringstream msg;
    msg << kind_name(gate.kind) << " expects " << want << " operand"
        << (want == 1 ? "" : "s") << ", got " << gate.operands.size();
    throw std::invalid_argument(msg.str());
  }
  for (size_t i = 0; i < gate.operands.size(); ++i) {
    const int q = gate.operands[i];
    if (q < 0 || q >= num_qubits) {
      std::ostringstream msg;
      msg << kind_name(gate.kind) << " operand " << q << " out of range for "
          << num_qubits << " qubit" << (num_qubits == 1 ? "" : "s");
      throw std::invalid_argument(msg.str());
    }
    for (size_t j = i + 1; j < gate.operands.size(); ++j) {
      if (gate.operands[j] == q) {
        std::ostringstream msg;
        msg << kind_name(gate.kind) << " operands must be distinct, got qubit "
            << q << " twice";
        throw std::invalid_argument(msg.str());
      }
    }
  }
  if (is_parameterized(gate.kind)) {
    if (!gate.angle.has_value()) {
      std::ostringstream msg;
      msg << kind_name(gate.kind) << " requires an angle";
      throw std::invalid_argument(msg.str());
    }
  } else if (gate.angle.has_value()) {
    std::ostringstream msg;
    msg << kind_name(gate.kind) << " does not take an angle";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace qcpart
