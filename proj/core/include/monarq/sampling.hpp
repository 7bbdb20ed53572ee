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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "monarq/circuit.hpp"
#include "monarq/statevector.hpp"

namespace monarq {

/// Map from measured bitstrings to shot counts. All keys have length
/// bit_length = |measured qubits| and the counts sum to `shots`.
struct CountsTable {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;
  std::size_t bit_length = 0;
};

/// Stochastic two-qubit depolarizing noise: after each CX/CZ, with
/// probability p2q a uniformly random non-identity two-qubit Pauli is
/// applied to the gate's qubit pair.
struct NoiseConfig {
  double p2q = 0.0;
  std::uint64_t seed = 0;
};

/// Marginal probabilities over the measured qubits; entry k corresponds to
/// the pattern gather_bits(index, measured_qubits) == k.
std::vector<double> marginal_probabilities(const StateVector& state,
                                           const std::vector<int>& measured_qubits);

/// Draws `shots` bitstrings from the marginal distribution over
/// `measured_qubits` (unmeasured qubits are traced out). Deterministic for
/// a fixed seed.
CountsTable sample_counts(const StateVector& state,
                          const std::vector<int>& measured_qubits,
                          std::uint64_t shots, std::uint64_t seed);

/// Shot-by-shot trajectory sampling with stochastic Pauli insertion after
/// every two-qubit gate. Shots without an error event are sampled from a
/// cached noiseless run. Deterministic for a fixed noise.seed; with
/// p2q == 0 the result is identical to sample_counts at the same seed.
CountsTable run_noisy_trajectories(const Circuit& circuit,
                                   const NoiseConfig& noise,
                                   std::uint64_t shots);

}  // namespace monarq
