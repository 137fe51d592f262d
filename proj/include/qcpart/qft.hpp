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

/// n-qubit quantum Fourier transform, including the terminal qubit-reversal
/// swap stage. With decomposed=false the circuit is H / controlled-phase /
/// SWAP; with decomposed=true every CP and SWAP is lowered to the
/// {1-qubit, CNOT} library (see decompose()). Throws std::invalid_argument
/// for n < 1. Circuit name is "qft<n>".
Circuit generate_qft(int n, bool decomposed = true);

}  // namespace qcpart
