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

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "monarq/circuit.hpp"

namespace monarq {

/// Dense-simulation width limit. Defaults to 22 qubits; the environment
/// variable MONARQ_MAX_QUBITS overrides it (values 1..30 accepted).
int max_qubits();

/// Dense array of 2^width complex amplitudes, initialized to |0...0>.
class StateVector {
 public:
  explicit StateVector(int width);

  int width() const { return width_; }
  std::uint64_t size() const { return amps_.size(); }
  std::complex<double> amp(std::uint64_t index) const { return amps_[index]; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

  double norm() const;

  void apply(const Gate& gate);

  /// Applies a Pauli operator: 1 = X, 2 = Y, 3 = Z. Used by the noise
  /// trajectory sampler; Paulis other than X are not circuit gates.
  void apply_pauli(int pauli, int q);

  double probability_of_one(int q) const;
  double expectation_z(int q) const;

 private:
  void apply_h(int q);
  void apply_x(int q);
  void apply_y(int q);
  void apply_z(int q);
  void apply_ry(double angle, int q);
  void apply_rz(double angle, int q);
  void apply_cx(int control, int target);
  void apply_cz(int a, int b);

  int width_;
  std::vector<std::complex<double>> amps_;
};

/// Runs the circuit on |0...0> and returns the exact final state.
/// Throws CapacityError when the width exceeds max_qubits() and
/// std::runtime_error if the final norm drifts outside 1 +- 1e-9.
StateVector run_statevector(const Circuit& circuit);

/// Per-address conditional <Z> on `data_qubit`, keyed by the integer
/// address gather_bits(index, address_qubits). Addresses with zero
/// probability are omitted. An empty address list yields {0: <Z>}, the
/// unconditioned expectation (the average over all addresses).
std::map<std::uint64_t, double> conditional_expectation_z_indexed(
    const StateVector& state, int data_qubit,
    const std::vector<int>& address_qubits);

/// Same map keyed by address bitstring (first listed address qubit is the
/// rightmost character). The empty address list yields {"": <Z>}.
std::map<std::string, double> conditional_expectation_z(
    const StateVector& state, int data_qubit,
    const std::vector<int>& address_qubits);

}  // namespace monarq
