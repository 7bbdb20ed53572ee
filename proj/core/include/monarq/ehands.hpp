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

#pragma once

#include <optional>

#include "monarq/circuit.hpp"

namespace monarq {

enum class TapSemantic { product, weighted_sum, negation };

/// Records where an arithmetic result can be read back: <Z> on
/// result_qubit carries the value. For products the memory operand stays
/// reusable on memory_qubit.
struct ArithmeticTap {
  int result_qubit = -1;
  std::optional<int> memory_qubit;
  TapSemantic semantic = TapSemantic::product;
  double weight = 0.0;  // weighted_sum only
};

/// Rotation angle realizing weight w in the weighted-sum primitive:
/// alpha = 2*arcsin(sqrt(w)), i.e. w = sin^2(alpha/2). Pinned by the exact
/// weighted-sum oracle over the full (x, y, w) grid; at w = 1/2 both sign
/// conventions coincide (alpha = pi/2).
double alpha_of_weight(double w);

/// Product-with-memory: RZ(pi/2) on the operand, then CX(memory ->
/// operand). Afterwards <Z> on the operand qubit equals x*y for
/// EVEN-encoded inputs, and the memory qubit still carries x, reusable as
/// the memory of further products.
ArithmeticTap append_product(Circuit& circuit, int memory_qubit,
                             int operand_qubit);

/// Weighted sum: RZ(pi/2) on bottom, CX(top -> bottom), RY(alpha/2) on
/// top, CX(bottom -> top), RY(-alpha/2) on top. Afterwards <Z> on the top
/// qubit equals w*x + (1-w)*y where x is the top input and y the bottom.
/// The bottom operand is consumed. Requires w in [0, 1].
ArithmeticTap append_weighted_sum(Circuit& circuit, int top_qubit,
                                  int bottom_qubit, double w);

/// Negation: a single X gate, <Z> becomes -x.
ArithmeticTap append_negation(Circuit& circuit, int qubit);

/// Reference resource costs for a degree-d polynomial built from these
/// primitives: 3d qubits, 5d-2 two-qubit gates, circuit depth 4d.
/// Recorded as documentation constants; generic synthesis is out of scope.
struct ResourceReference {
  int degree = 0;
  int qubits = 0;
  int two_qubit_gates = 0;
  int depth = 0;
};

ResourceReference resource_reference(int degree);

}  // namespace monarq
