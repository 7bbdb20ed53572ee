// Copyright 2026 The Monarq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "monarq/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace monarq {

Gate Gate::cz(int a, int b) {
  if (a > b) std::swap(a, b);
  return {GateKind::CZ, 0.0, a, b};
}

Circuit::Circuit(int width) : width_(width) {
  if (width < 1) {
    throw std::invalid_argument("circuit width must be at least 1, got " +
                                std::to_string(width));
  }
}

void Circuit::check_qubit(int q) const {
  if (q < 0 || q >= width_) {
    throw std::invalid_argument("qubit index " + std::to_string(q) +
                                " outside register of width " +
                                std::to_string(width_));
  }
}

void Circuit::append(const Gate& gate) {
  check_qubit(gate.q0);
  if (gate.is_two_qubit()) {
    check_qubit(gate.q1);
    if (gate.q0 == gate.q1) {
      throw std::invalid_argument("two-qubit gate needs distinct qubits, got " +
                                  std::to_string(gate.q0) + " twice");
    }
  }
  if ((gate.kind == GateKind::RY || gate.kind == GateKind::RZ) &&
      !std::isfinite(gate.angle)) {
    throw std::invalid_argument("rotation angle must be finite");
  }
  gates_.push_back(gate);
}

void Circuit::set_measured(std::vector<int> qubits) {
  std::vector<int> sorted = qubits;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate qubit in measurement list");
  }
  for (int q : qubits) check_qubit(q);
  measured_ = std::move(qubits);
}

std::size_t Circuit::two_qubit_gate_count() const {
  std::size_t n = 0;
  for (const Gate& g : gates_) {
    if (g.is_two_qubit()) ++n;
  }
  return n;
}

std::string bitstring_from_pattern(std::uint64_t pattern, std::size_t bits) {
  std::string s(bits, '0');
  for (std::size_t j = 0; j < bits; ++j) {
    if ((pattern >> j) & 1ULL) s[bits - 1 - j] = '1';
  }
  return s;
}

}  // namespace monarq
