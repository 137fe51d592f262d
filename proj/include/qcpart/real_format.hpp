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
#include <vector>

#include "qcpart/circuit.hpp"

namespace qcpart {

/// Header of a RevLib `.real` document. Lines that do not affect connectivity
/// (.inputs/.outputs/.constants/.garbage) are retained verbatim.
struct RealHeader {
  std::string version;
  int numvars = 0;
  std::vector<std::string> variables;
  std::vector<std::string> extras;
};

struct RealDocument {
  RealHeader header;
  Circuit circuit;
};

// Parses the supported subset of RevLib `.real`:
//   t1 a       -> X(a)
//   t2 a b     -> CNOT(a, b)          (control a, target b)
//   t3 a b c   -> Toffoli(a, b; c)
//   f2 a b     -> SWAP(a, b)
//   f3 a b c   -> Fredkin(a; b, c)
//   v a b, v+ a b -> opaque 2-qubit gate
// Negative-control markers (`-` prefix) are accepted; connectivity does not
// depend on control polarity. `#` starts a comment. Gate tokens touching more
// than 3 qubits (t4, f4, ...) raise UnsupportedGateError; other malformed
// content raises ParseError, always with a 1-based line number.
RealDocument parse_real_document(const std::string& text, const std::string& name = "");

/// Circuit-only convenience wrapper around parse_real_document.
Circuit parse_real(const std::string& text, const std::string& name = "");

}  // namespace qcpart
