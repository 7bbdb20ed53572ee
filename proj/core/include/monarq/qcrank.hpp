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
#include <optional>
#include <vector>

#include "monarq/circuit.hpp"
#include "monarq/even.hpp"
#include "monarq/sampling.hpp"
#include "monarq/statevector.hpp"

namespace monarq {

/// Register partition for QCrank encoding: n_a address qubits index 2^n_a
/// memory slots, n_d data qubits each carry one EVEN-encoded channel.
/// Address qubits are 0 .. n_a-1, data qubit of channel j is n_a + j.
struct QcrankLayout {
  int n_a = 0;
  int n_d = 0;
  std::size_t length = 0;  // logical sequence length L
  double pad_value = 0.0;  // used for slots at indices >= L

  std::size_t slots() const { return std::size_t{1} << n_a; }
  std::size_t capacity() const { return slots() * static_cast<std::size_t>(n_d); }
  int total_qubits() const { return n_a + n_d; }
  int data_qubit(int channel) const { return n_a + channel; }
  std::vector<int> address_qubits() const;
};

/// n_a = ceil(log2(max(L, 2))), so a length-1 sequence still gets one
/// address qubit and a padded second slot.
QcrankLayout plan_layout(std::size_t length, int n_d, double pad_value = 0.0);

/// n_d rows by 2^n_a columns of values in [-1, 1]; columns past the
/// logical length hold the pad value.
class DataMatrix {
 public:
  /// Pads each sequence (length == layout.length) out to 2^n_a slots.
  static DataMatrix from_sequences(const QcrankLayout& layout,
                                   const std::vector<std::vector<double>>& sequences);

  int channels() const { return static_cast<int>(rows_.size()); }
  std::size_t slots() const { return rows_.empty() ? 0 : rows_[0].size(); }
  double value(int channel, std::size_t slot) const { return rows_[channel][slot]; }
  const std::vector<double>& channel(int j) const { return rows_[j]; }

 private:
  std::vector<std::vector<double>> rows_;
};

/// Rotation increments for a uniformly controlled RY: the Walsh-Hadamard
/// transform of the target angles, scaled by 1/2^n and reordered so that
/// alternating RY(phi_k) / CX gates, with CX controls following the
/// Gray-code bit-change sequence, reproduce the multiplexed rotation
/// exactly. Input length must be a power of two.
std::vector<double> ucr_angles(const std::vector<double>& thetas);

/// State-preparation circuit: H on every address qubit, then one parallel
/// uniformly controlled RY per data channel. Channels share the address
/// controls but target disjoint data qubits, so their gates interleave
/// column by column. Two-qubit gate count is exactly n_d * 2^n_a.
/// No measurement is set; callers append further gates and measure.
Circuit build_qcrank(const QcrankLayout& layout, const DataMatrix& data);

/// Decoded data matrix; slots whose address never appeared in the counts
/// are std::nullopt rather than invented values.
using QcrankDecode = std::vector<std::vector<std::optional<EvenEstimate>>>;

/// Counts must cover all address qubits then all data qubits, in layout
/// order (the measurement set by measure_all_qcrank).
QcrankDecode decode_qcrank(const CountsTable& counts, const QcrankLayout& layout);

/// Exact per-slot recovery from the final state: channel-major matrix of
/// conditional <Z> values.
std::vector<std::vector<double>> decode_qcrank_exact(const StateVector& state,
                                                     const QcrankLayout& layout);

/// Measurement order used by decode_qcrank: addresses first, then data.
void measure_all_qcrank(Circuit& circuit, const QcrankLayout& layout);

}  // namespace monarq
