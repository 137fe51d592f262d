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

#include <optional>
#include <string>
#include <vector>

namespace qcpart {

// Gate families. Generic1/2/3 are opaque gates of known arity but unknown
// unitary (RevLib `v`/`v+` land on Generic2); they take part in connectivity
// analysis like any other gate of their arity.
enum class GateKind {
  H,
  X,
  Rz,
  Generic1,
  Cnot,
  Cp,
  Swap,
  Generic2,
  Toffoli,
  Fredkin,
  Generic3,
};

int arity(GateKind kind);
bool is_parameterized(GateKind kind);  // true for Rz and Cp
const char* kind_name(GateKind kind);
std::optional<GateKind> kind_from_name(const std::string& name);

/// One circuit operation: a gate family, 1-3 pairwise-distinct qubit operands
/// (control(s) first where the family has controls), and an angle in radians
/// for the parameterized families.
struct Gate {
  GateKind kind;
  std::vector<int> operands;
  std::optional<double> angle;

  static Gate h(int q) { return {GateKind::H, {q}, {}}; }
  static Gate x(int q) { return {GateKind::X, {q}, {}}; }
  static Gate rz(int q, double angle) { return {GateKind::Rz, {q}, angle}; }
  static Gate generic1(int q) { return {GateKind::Generic1, {q}, {}}; }
  static Gate cnot(int control, int target) { return {GateKind::Cnot, {control, target}, {}}; }
  static Gate cp(int a, int b, double angle) { return {GateKind::Cp, {a, b}, angle}; }
  static Gate swap(int a, int b) { return {GateKind::Swap, {a, b}, {}}; }
  static Gate generic2(int a, int b) { return {GateKind::Generic2, {a, b}, {}}; }
  static Gate toffoli(int c1, int c2, int target) {
    return {GateKind::Toffoli, {c1, c2, target}, {}};
  }
  static Gate fredkin(int control, int t1, int t2) {
    return {GateKind::Fredkin, {control, t1, t2}, {}};
  }
  static Gate generic3(int a, int b, int c) { return {GateKind::Generic3, {a, b, c}, {}}; }

  bool operator==(const Gate&) const = default;
};

/// Throws std::invalid_argument if the gate breaks an invariant: operand count
/// must match the family arity, operands must be pairwise distinct and inside
/// [0, num_qubits), and the angle must be present exactly for Rz/Cp.
void validate_gate(const Gate& gate, int num_qubits);

}  // namespace qcpart
