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

#include "qcpart/circuit.hpp"

namespace qcpart {

// Circuit JSON schema:
//   {"name": string?, "qubits": int, "gates":
//     [{"kind": string, "operands": [int...], "angle": number?}, ...]}
// Gate kinds: h x rz g1 cnot cp swap g2 toffoli fredkin g3; "angle" is
// required for rz/cp and rejected elsewhere. Validation mirrors the Gate
// invariants; violations raise ParseError carrying a JSON pointer.
Circuit parse_json(const std::string& text);

/// Serializes a circuit; parse_json(write_json(c)) == c.
std::string write_json(const Circuit& circuit);

}  // namespace qcpart
