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

#include "qcpart/qft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcpart/decompose.hpp"

namespace qcpart {

Circuit generate_qft(int n, bool decomposed) {
  if (n < 1) {
    throw std::invalid_argument("qft size must be at least 1");
  }
  std::vector<Gate> gates;
  for (int i = 0; i < n; ++i) {
    gates.push_back(Gate::h(i));
    for (int j = i + 1; j < n; ++j) {
      const double angle = std::numbers::pi / std::ldexp(1.0, j - i);
      gates.push_back(Gate::cp(j, i, angle));
    }
  }
  for (int i = 0; i < n / 2; ++i) {
    gates.push_back(Gate::swap(i, n - 1 - i));
  }
  Circuit circuit(n, std::move(gates), "qft" + std::to_string(n));
  if (decomposed) {
    return decompose(circuit);
  }
  return circuit;
}

}  // namespace qcpart
