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

#include "monarq/ehands.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace monarq {

double alpha_of_weight(double w) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw std::invalid_argument("weight " + std::to_string(w) +
                                " outside [0, 1]");
  }
  return 2.0 * std::asin(std::sqrt(w));
}

ArithmeticTap append_product(Circuit& circuit, int memory_qubit,
                             int operand_qubit) {
  if (memory_qubit == operand_qubit) {
    throw std::invalid_argument("product needs two distinct qubits");
  }
  circuit.rz(std::numbers::pi / 2.0, operand_qubit);
  circuit.cx(memory_qubit, operand_qubit);

  ArithmeticTap tap;
  tap.result_qubit = operand_qubit;
  tap.memory_qubit = memory_qubit;
  tap.semantic = TapSemantic::product;
  return tap;
}

ArithmeticTap append_weighted_sum(Circuit& circuit, int top_qubit,
                                  int bottom_qubit, double w) {
  if (top_qubit == bottom_qubit) {
    throw std::invalid_argument("weighted sum needs two distinct qubits");
  }
  const double alpha = alpha_of_weight(w);
  circuit.rz(std::numbers::pi / 2.0, bottom_qubit);
  circuit.cx(top_qubit, bottom_qubit);
  circuit.ry(alpha / 2.0, top_qubit);
  circuit.cx(bottom_qubit, top_qubit);
  circuit.ry(-alpha / 2.0, top_qubit);

  ArithmeticTap tap;
  tap.result_qubit = top_qubit;
  tap.semantic = TapSemantic::weighted_sum;
  tap.weight = w;
  return tap;
}

ArithmeticTap append_negation(Circuit& circuit, int qubit) {
  circuit.x(qubit);

  ArithmeticTap tap;
  tap.result_qubit = qubit;
  tap.semantic = TapSemantic::negation;
  return tap;
}

ResourceReference resource_reference(int degree) {
  if (degree < 1) {
    throw std::invalid_argument("polynomial degree must be at least 1");
  }
  return ResourceReference{degree, 3 * degree, 5 * degree - 2, 4 * degree};
}

}  // namespace monarq
