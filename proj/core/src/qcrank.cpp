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

#include "monarq/qcrank.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "monarq/errors.hpp"

namespace monarq {

namespace {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place Walsh-Hadamard butterfly; output[m] = sum_a (-1)^popcount(a&m) in[a].
void fwht(std::vector<double>& v) {
  for (std::size_t h = 1; h < v.size(); h <<= 1) {
    for (std::size_t block = 0; block < v.size(); block += h << 1) {
      for (std::size_t i = block; i < block + h; ++i) {
        const double x = v[i];
        const double y = v[i + h];
        v[i] = x + y;
        v[i + h] = x - y;
      }
    }
  }
}

std::size_t gray_code(std::size_t k) { return k ^ (k >> 1); }

}  // namespace

std::vector<int> QcrankLayout::address_qubits() const {
  std::vector<int> qubits(n_a);
  for (int k = 0; k < n_a; ++k) qubits[k] = k;
  return qubits;
}

QcrankLayout plan_layout(std::size_t length, int n_d, double pad_value) {
  if (length < 1) {
    throw std::invalid_argument("sequence length must be at least 1");
  }
  if (n_d < 1) {
    throw std::invalid_argument("channel count must be at least 1");
  }
  if (!(std::abs(pad_value) <= 1.0)) {
    throw std::invalid_argument("pad value must lie in [-1, 1]");
  }
  QcrankLayout layout;
  layout.length = length;
  layout.n_d = n_d;
  layout.pad_value = pad_value;
  layout.n_a = 1;
  while ((std::size_t{1} << layout.n_a) < length) ++layout.n_a;
  return layout;
}

DataMatrix DataMatrix::from_sequences(
    const QcrankLayout& layout, const std::vector<std::vector<double>>& sequences) {
  if (static_cast<int>(sequences.size()) != layout.n_d) {
    throw std::invalid_argument("expected " + std::to_string(layout.n_d) +
                                " sequences, got " +
                                std::to_string(sequences.size()));
  }
  DataMatrix data;
  data.rows_.reserve(sequences.size());
  for (const auto& seq : sequences) {
    if (seq.size() != layout.length) {
      throw std::invalid_argument("sequence length " +
                                  std::to_string(seq.size()) +
                                  " does not match layout length " +
                                  std::to_string(layout.length));
    }
    std::vector<double> row(layout.slots(), layout.pad_value);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (!(std::abs(seq[i]) <= 1.0)) {
        throw std::invalid_argument("value " + std::to_string(seq[i]) +
                                    " at slot " + std::to_string(i) +
                                    " outside [-1, 1]");
      }
      row[i] = seq[i];
    }
    data.rows_.push_back(std::move(row));
  }
  return data;
}

std::vector<double> ucr_angles(const std::vector<double>& thetas) {
  if (!is_power_of_two(thetas.size())) {
    throw std::invalid_argument("angle count must be a power of two, got " +
                                std::to_string(thetas.size()));
  }
  std::vector<double> transformed = thetas;
  fwht(transformed);
  const double scale = 1.0 / static_cast<double>(thetas.size());
  std::vector<double> phis(thetas.size());
  for (std::size_t k = 0; k < phis.size(); ++k) {
    phis[k] = transformed[gray_code(k)] * scale;
  }
  return phis;
}

Circuit build_qcrank(const QcrankLayout& layout, const DataMatrix& data) {
  if (data.channels() != layout.n_d || data.slots() != layout.slots()) {
    throw std::invalid_argument("data matrix shape does not match layout");
  }

  Circuit circuit(layout.total_qubits());
  for (int a = 0; a < layout.n_a; ++a) circuit.h(a);

  const std::size_t slots = layout.slots();
  std::vector<std::vector<double>> phis(layout.n_d);
  for (int j = 0; j < layout.n_d; ++j) {
    std::vector<double> thetas(slots);
    for (std::size_t i = 0; i < slots; ++i) {
      thetas[i] = value_to_angle(data.value(j, i));
    }
    phis[j] = ucr_angles(thetas);
  }

  // One multiplexed-rotation column at a time so the channels interleave:
  // all rotations, then the CX layer whose control is the address bit that
  // flips between consecutive Gray codes (the last CX closes the cycle on
  // the top address bit).
  for (std::size_t k = 0; k < slots; ++k) {
    for (int j = 0; j < layout.n_d; ++j) {
      circuit.ry(phis[j][k], layout.data_qubit(j));
    }
    const int control = (k + 1 == slots)
                            ? layout.n_a - 1
                            : std::countr_zero(k + 1);
    for (int j = 0; j < layout.n_d; ++j) {
      circuit.cx(control, layout.data_qubit(j));
    }
  }
  return circuit;
}

void measure_all_qcrank(Circuit& circuit, const QcrankLayout& layout) {
  std::vector<int> measured = layout.address_qubits();
  for (int j = 0; j < layout.n_d; ++j) {
    measured.push_back(layout.data_qubit(j));
  }
  circuit.set_measured(std::move(measured));
}

QcrankDecode decode_qcrank(const CountsTable& counts, const QcrankLayout& layout) {
  const std::size_t expected_bits =
      static_cast<std::size_t>(layout.total_qubits());
  if (counts.bit_length != expected_bits) {
    throw std::invalid_argument(
        "counts cover " + std::to_string(counts.bit_length) +
        " qubits but the layout needs " + std::to_string(expected_bits));
  }

  QcrankDecode decoded(layout.n_d);
  for (int j = 0; j < layout.n_d; ++j) {
    decoded[j].assign(layout.slots(), std::nullopt);
  }
  for (std::size_t i = 0; i < layout.slots(); ++i) {
    const std::string address = bitstring_from_pattern(i, layout.n_a);
    for (int j = 0; j < layout.n_d; ++j) {
      try {
        decoded[j][i] = estimate_from_counts(
            counts, address, static_cast<std::size_t>(layout.n_a + j));
      } catch (const MissingAddressError&) {
        // left as nullopt; decoding never invents values
      }
    }
  }
  return decoded;
}

std::vector<std::vector<double>> decode_qcrank_exact(const StateVector& state,
                                                     const QcrankLayout& layout) {
  if (state.width() != layout.total_qubits()) {
    throw std::invalid_argument("state width does not match layout");
  }
  const std::vector<int> addresses = layout.address_qubits();
  std::vector<std::vector<double>> decoded(layout.n_d);
  for (int j = 0; j < layout.n_d; ++j) {
    decoded[j].assign(layout.slots(), 0.0);
    const auto by_address =
        conditional_expectation_z_indexed(state, layout.data_qubit(j), addresses);
    for (const auto& [address, value] : by_address) {
      decoded[j][address] = value;
    }
  }
  return decoded;
}

}  // namespace monarq
