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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace monarq {

enum class GateKind { H, X, RY, RZ, CX, CZ };

/// One gate on a fixed-width register. Rotations use the half-angle
/// convention RY(t) = exp(-i t Y / 2), RZ(t) = exp(-i t Z / 2).
struct Gate {
  GateKind kind;
  double angle;  // radians; RY/RZ only
  int q0;        // single-qubit target, CX control, or first CZ qubit
  int q1;        // CX target or second CZ qubit; -1 for single-qubit gates

  static Gate h(int q) { return {GateKind::H, 0.0, q, -1}; }
  static Gate x(int q) { return {GateKind::X, 0.0, q, -1}; }
  static Gate ry(double angle, int q) { return {GateKind::RY, angle, q, -1}; }
  static Gate rz(double angle, int q) { return {GateKind::RZ, angle, q, -1}; }
  static Gate cx(int control, int target) {
    return {GateKind::CX, 0.0, control, target};
  }
  // CZ is symmetric; the pair is stored in canonical (low, high) order.
  static Gate cz(int a, int b);

  bool is_two_qubit() const {
    return kind == GateKind::CX || kind == GateKind::CZ;
  }
};

/// Ordered gate list plus the readout plan.
///
/// Conventions, pinned once for the whole project:
///  - qubit 0 is the least significant bit of the amplitude index;
///  - measured bitstrings place the first listed qubit as the rightmost
///    character, so measuring qubits [0, 1, .., k-1] prints the register
///    value as ordinary binary with the most significant bit on the left.
class Circuit {
 public:
  Circuit() : Circuit(1) {}
  explicit Circuit(int width);

  void append(const Gate& gate);

  void h(int q) { append(Gate::h(q)); }
  void x(int q) { append(Gate::x(q)); }
  void ry(double angle, int q) { append(Gate::ry(angle, q)); }
  void rz(double angle, int q) { append(Gate::rz(angle, q)); }
  void cx(int control, int target) { append(Gate::cx(control, target)); }
  void cz(int a, int b) { append(Gate::cz(a, b)); }

  /// Declares which qubits are read out, in order. Duplicates rejected.
  void set_measured(std::vector<int> qubits);

  int width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<int>& measured_qubits() const { return measured_; }
  std::size_t gate_count() const { return gates_.size(); }
  std::size_t two_qubit_gate_count() const;

 private:
  void check_qubit(int q) const;

  int width_;
  std::vector<Gate> gates_;
  std::vector<int> measured_;
};

/// Pattern of measured bits -> bitstring, first listed qubit rightmost.
std::string bitstring_from_pattern(std::uint64_t pattern, std::size_t bits);

/// Extracts the bits of `qubits` from a basis-state index, packing
/// qubits[j] into bit j of the result.
inline std::uint64_t gather_bits(std::uint64_t index,
                                 const std::vector<int>& qubits) {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < qubits.size(); ++j) {
    out |= ((index >> qubits[j]) & 1ULL) << j;
  }
  return out;
}

}  // namespace monarq
