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

#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "common/unitary.hpp"
#include "qcpart/qft.hpp"

using namespace qcpart;

namespace {

std::map<GateKind, int> kind_histogram(const Circuit& circuit) {
  std::map<GateKind, int> hist;
  for (const Gate& gate : circuit.gates()) ++hist[gate.kind];
  return hist;
}

}  // namespace

TEST_CASE("qft of one qubit is a single hadamard") {
  const Circuit circuit = generate_qft(1, true);
  REQUIRE(circuit.gates().size() == 1);
  CHECK(circuit.gates()[0] == Gate::h(0));
  CHECK(circuit.num_qubits() == 1);
  CHECK(circuit.name() == "qft1");
  CHECK(generate_qft(1, false).gates() == circuit.gates());
}

TEST_CASE("qft rejects non-positive sizes") {
  CHECK_THROWS_AS(generate_qft(0, true), std::invalid_argument);
  CHECK_THROWS_AS(generate_qft(-3, false), std::invalid_argument);
}

TEST_CASE("undecomposed qft-4 has the documented gate sequence") {
  const Circuit circuit = generate_qft(4, false);
  const double pi = std::numbers::pi;
  const std::vector<Gate> expected{
      Gate::h(0),
      Gate::cp(1, 0, pi / 2), Gate::cp(2, 0, pi / 4), Gate::cp(3, 0, pi / 8),
      Gate::h(1),
      Gate::cp(2, 1, pi / 2), Gate::cp(3, 1, pi / 4),
      Gate::h(2),
      Gate::cp(3, 2, pi / 2),
      Gate::h(3),
      Gate::swap(0, 3), Gate::swap(1, 2),
  };
  CHECK(circuit.gates() == expected);
}

TEST_CASE("undecomposed qft-n gate counts") {
  for (const int n : {2, 3, 5, 8}) {
    const Circuit circuit = generate_qft(n, false);
    const auto hist = kind_histogram(circuit);
    CHECK(hist.at(GateKind::H) == n);
    CHECK(hist.at(GateKind::Cp) == n * (n - 1) / 2);
    CHECK(hist.at(GateKind::Swap) == n / 2);
    CHECK(circuit.gates().size() ==
          static_cast<size_t>(n + n * (n - 1) / 2 + n / 2));
  }
}

TEST_CASE("decomposed qft-n gate counts") {
  // n H gates; n(n-1) CNOTs from the controlled-phase lowerings plus
  // 3*floor(n/2) from the swap stage; 3*C(n,2) Rz gates.
  for (const int n : {1, 2, 3, 4, 7, 8}) {
    const Circuit circuit = generate_qft(n, true);
    const auto hist = kind_histogram(circuit);
    const int pairs = n * (n - 1) / 2;
    CHECK(hist.at(GateKind::H) == n);
    if (n > 1) {
      CHECK(hist.at(GateKind::Cnot) == n * (n - 1) + 3 * (n / 2));
      CHECK(hist.at(GateKind::Rz) == 3 * pairs);
    }
    CHECK(hist.count(GateKind::Cp) == 0);
    CHECK(hist.count(GateKind::Swap) == 0);
  }
}

TEST_CASE("qft-4 has 18 cnots when decomposed") {
  const auto hist = kind_histogram(generate_qft(4, true));
  CHECK(hist.at(GateKind::Cnot) == 18);  // 12 from six CPs + 6 from two SWAPs
}

TEST_CASE("qft unitary equals the discrete fourier transform") {
  // With the terminal swap stage the circuit is the exact DFT when basis
  // indices are read with qubit 0 as the most significant bit.
  for (const int n : {1, 2, 3, 4}) {
    const Circuit circuit = generate_qft(n, false);
    const auto u = test::unitary_of(circuit);
    const size_t dim = size_t{1} << n;
    const auto msb_value = [n](size_t s) {
      size_t v = 0;
      for (int q = 0; q < n; ++q) v |= ((s >> q) & 1u) << (n - 1 - q);
      return v;
    };
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    bool all_match = true;
    for (size_t col = 0; col < dim; ++col) {
      for (size_t row = 0; row < dim; ++row) {
        const double angle = 2.0 * std::numbers::pi *
                             static_cast<double>(msb_value(col) * msb_value(row)) /
                             static_cast<double>(dim);
        const test::Amp want = std::polar(norm, angle);
        if (std::abs(u[col][row] - want) > 1e-9) all_match = false;
      }
    }
    CHECK(all_match);
  }
}

TEST_CASE("decomposed qft matches the undecomposed unitary") {
  for (const int n : {2, 3, 4}) {
    CHECK(test::equal_up_to_phase(test::unitary_of(generate_qft(n, false)),
                                  test::unitary_of(generate_qft(n, true))));
  }
}
