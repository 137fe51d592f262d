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

#include "qcpart/circuit.hpp"

namespace qcpart {

// Lowers a circuit to the basic gate library {1-qubit gates, CNOT} without
// ancilla qubits. Equivalent up to global phase:
//   SWAP(a,b)    -> CNOT(a,b) CNOT(b,a) CNOT(a,b)
//   CP(a,b;t)    -> Rz(a,t/2) CNOT(a,b) Rz(b,-t/2) CNOT(a,b) Rz(b,t/2)
//   Toffoli      -> the standard 6-CNOT network (2 H + 7 T-type rotations)
//   Fredkin(c;x,y) -> CNOT(y,x) Toffoli(c,x;y) CNOT(y,x), Toffoli expanded
// Basic gates pass through unchanged, as do the opaque Generic kinds (no
// unitary is known for them). Idempotent; preserves qubit count and name.
Circuit decompose(const Circuit& circuit);

}  // namespace qcpart
