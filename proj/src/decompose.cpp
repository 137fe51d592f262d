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

#include "qcpart/decompose.hpp"

#include <numbers>
#include <vector>

namespace qcpart {
namespace {

constexpr double kQuarterTurn = std::numbers::pi / 4.0;

void emit_cp(std::vector<Gate>& out, int a, int b, double angle) {
  out.push_back(Gate::rz(a, angle / 2.0));
  out.push_back(Gate::cnot(a, b));
  out.push_back(Gate::rz(b, -angle / 2.0));
  out.push_back(Gate::cnot(a, b));
  out.push_back(Gate::rz(b, angle / 2.0));
}

void emit_swap(std::vector<Gate>& out, int a, int b) {
  out.push_back(Gate::cnot(a, b));
  out.push_back(Gate::cnot(b, a));
  out.push_back(Gate::cnot(a, b));
}

// Six-CNOT Toffoli over {H, Rz(+-pi/4), CNOT}; equal to the exact gate up to
// global phase.
void emit_toffoli(std::vector<Gate>& out, int c0, int c1, int t) {
  out.push_back(Gate::h(t));
  out.push_back(Gate::cnot(c1, t));
  out.push_back(Gate::rz(t, -kQuarterTurn));
  out.push_back(Gate::cnot(c0, t));
  out.push_back(Gate::rz(t, kQuarterTurn));
  out.push_back(Gate::cnot(c1, t));
  out.push_back(Gate::rz(t, -kQuarterTurn));
  out.push_back(Gate::cnot(c0, t));
  out.push_back(Gate::rz(c1, kQuarterTurn));
  out.push_back(Gate::rz(t, kQuarterTurn));
  out.push_back(Gate::h(t));
  out.push_back(Gate::cnot(c0, c1));
  out.push_back(Gate::rz(c0, kQuarterTurn));
  out.push_back(Gate::rz(c1, -kQuarterTurn));
  out.push_back(Gate::cnot(c0, c1));
}

// CSWAP(c; a, b): conjugating a Toffoli targeted at b by CNOT(b -> a) turns
// the controlled-AND into a controlled-swap.
void emit_fredkin(std::vector<Gate>& out, int c, int a, int b) {
  out.push_back(Gate::cnot(b, a));
  emit_toffoli(out, c, a, b);
  out.push_back(Gate::cnot(b, a));
}

}  // namespace

Circuit decompose(const Circuit& circuit) {
  std::vector<Gate> out;
  out.reserve(circuit.gates().size());
  for (const Gate& gate : circuit.gates()) {
    switch (gate.kind) {
      case GateKind::Cp:
        emit_cp(out, gate.operands[0], gate.operands[1], *gate.angle);
        break;
      case GateKind::Swap:
        emit_swap(out, gate.operands[0], gate.operands[1]);
        break;
      case GateKind::Toffoli:
        emit_toffoli(out, gate.operands[0], gate.operands[1], gate.operands[2]);
        break;
      case GateKind::Fredkin:
        emit_fredkin(out, gate.operands[0], gate.operands[1], gate.operands[2]);
        break;
      default:
        out.push_back(gate);
        break;
    }
  }
  return Circuit(circuit.num_qubits(), std::move(out), circuit.name());
}

}  // namespace qcpart
