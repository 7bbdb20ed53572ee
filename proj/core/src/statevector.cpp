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

#include "monarq/statevector.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "monarq/errors.hpp"

namespace monarq {

namespace {
constexpr int kDefaultMaxQubits = 22;
constexpr double kNormTolerance = 1e-9;
// Conditional probabilities below this are treated as exact zeros and
// their addresses omitted, so rounding dust never turns into 0/0.
constexpr double kZeroProbability = 1e-14;
}  // namespace

int max_qubits() {
  if (const char* env = std::getenv("MONARQ_MAX_QUBITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 30) {
      return static_cast<int>(v);
    }
  }
  return kDefaultMaxQubits;
}

StateVector::StateVector(int width) : width_(width) {
  if (width < 1) {
    throw std::invalid_argument("state width must be at least 1");
  }
  if (width > max_qubits()) {
    throw CapacityError(width, max_qubits());
  }
  amps_.assign(std::uint64_t{1} << width, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

void StateVector::apply_h(int q) {
  const std::uint64_t step = std::uint64_t{1} << q;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::uint64_t hi = 0; hi < amps_.size(); hi += step << 1) {
    for (std::uint64_t lo = 0; lo < step; ++lo) {
      const std::uint64_t i0 = hi | lo;
      const std::uint64_t i1 = i0 | step;
      const auto a0 = amps_[i0];
      const auto a1 = amps_[i1];
      amps_[i0] = inv_sqrt2 * (a0 + a1);
      amps_[i1] = inv_sqrt2 * (a0 - a1);
    }
  }
}

void StateVector::apply_x(int q) {
  const std::uint64_t step = std::uint64_t{1} << q;
  for (std::uint64_t hi = 0; hi < amps_.size(); hi += step << 1) {
    for (std::uint64_t lo = 0; lo < step; ++lo) {
      const std::uint64_t i0 = hi | lo;
      std::swap(amps_[i0], amps_[i0 | step]);
    }
  }
}

void StateVector::apply_y(int q) {
  const std::uint64_t step = std::uint64_t{1} << q;
  const std::complex<double> plus_i{0.0, 1.0};
  const std::complex<double> minus_i{0.0, -1.0};
  for (std::uint64_t hi = 0; hi < amps_.size(); hi += step << 1) {
    for (std::uint64_t lo = 0; lo < step; ++lo) {
      const std::uint64_t i0 = hi | lo;
      const std::uint64_t i1 = i0 | step;
      const auto a0 = amps_[i0];
      const auto a1 = amps_[i1];
      amps_[i0] = minus_i * a1;
      amps_[i1] = plus_i * a0;
    }
  }
}

void StateVector::apply_z(int q) {
  const std::uint64_t mask = std::uint64_t{1} << q;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) amps_[i] = -amps_[i];
  }
}

void StateVector::apply_ry(double angle, int q) {
  const std::uint64_t step = std::uint64_t{1} << q;
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  for (std::uint64_t hi = 0; hi < amps_.size(); hi += step << 1) {
    for (std::uint64_t lo = 0; lo < step; ++lo) {
      const std::uint64_t i0 = hi | lo;
      const std::uint64_t i1 = i0 | step;
      const auto a0 = amps_[i0];
      const auto a1 = amps_[i1];
      amps_[i0] = c * a0 - s * a1;
      amps_[i1] = s * a0 + c * a1;
    }
  }
}

void StateVector::apply_rz(double angle, int q) {
  const std::uint64_t mask = std::uint64_t{1} << q;
  const std::complex<double> phase0 = std::polar(1.0, -angle / 2.0);
  const std::complex<double> phase1 = std::polar(1.0, angle / 2.0);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    amps_[i] *= (i & mask) ? phase1 : phase0;
  }
}

void StateVector::apply_cx(int control, int target) {
  const std::uint64_t mc = std::uint64_t{1} << control;
  const std::uint64_t mt = std::uint64_t{1} << target;
  const int qa = control < target ? control : target;
  const int qb = control < target ? target : control;
  const std::uint64_t lo_mask = (std::uint64_t{1} << qa) - 1;
  const std::uint64_t mid_mask = ((std::uint64_t{1} << (qb - 1)) - 1) ^ lo_mask;
  const std::uint64_t hi_mask = ~((std::uint64_t{1} << (qb - 1)) - 1);
  const std::uint64_t quarter = amps_.size() >> 2;
  for (std::uint64_t k = 0; k < quarter; ++k) {
    const std::uint64_t base =
        ((k & hi_mask) << 2) | ((k & mid_mask) << 1) | (k & lo_mask);
    std::swap(amps_[base | mc], amps_[base | mc | mt]);
  }
}

void StateVector::apply_cz(int a, int b) {
  const std::uint64_t ma = std::uint64_t{1} << a;
  const std::uint64_t mb = std::uint64_t{1} << b;
  const int qa = a < b ? a : b;
  const int qb = a < b ? b : a;
  const std::uint64_t lo_mask = (std::uint64_t{1} << qa) - 1;
  const std::uint64_t mid_mask = ((std::uint64_t{1} << (qb - 1)) - 1) ^ lo_mask;
  const std::uint64_t hi_mask = ~((std::uint64_t{1} << (qb - 1)) - 1);
  const std::uint64_t quarter = amps_.size() >> 2;
  for (std::uint64_t k = 0; k < quarter; ++k) {
    const std::uint64_t base =
        ((k & hi_mask) << 2) | ((k & mid_mask) << 1) | (k & lo_mask);
    amps_[base | ma | mb] = -amps_[base | ma | mb];
  }
}

void StateVector::apply(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::H:
      apply_h(gate.q0);
      break;
    case GateKind::X:
      apply_x(gate.q0);
      break;
    case GateKind::RY:
      apply_ry(gate.angle, gate.q0);
      break;
    case GateKind::RZ:
      apply_rz(gate.angle, gate.q0);
      break;
    case GateKind::CX:
      if (width_ < 2) throw std::invalid_argument("CX needs two qubits");
      apply_cx(gate.q0, gate.q1);
      break;
    case GateKind::CZ:
      if (width_ < 2) throw std::invalid_argument("CZ needs two qubits");
      apply_cz(gate.q0, gate.q1);
      break;
  }
}

void StateVector::apply_pauli(int pauli, int q) {
  switch (pauli) {
    case 1:
      apply_x(q);
      break;
    case 2:
      apply_y(q);
      break;
    case 3:
      apply_z(q);
      break;
    default:
      throw std::invalid_argument("pauli code must be 1 (X), 2 (Y) or 3 (Z)");
  }
}

double StateVector::probability_of_one(int q) const {
  const std::uint64_t mask = std::uint64_t{1} << q;
  double p = 0.0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) p += std::norm(amps_[i]);
  }
  return p;
}

double StateVector::expectation_z(int q) const {
  return 1.0 - 2.0 * probability_of_one(q);
}

StateVector run_statevector(const Circuit& circuit) {
  StateVector state(circuit.width());
  for (const Gate& gate : circuit.gates()) {
    state.apply(gate);
  }
  const double n = state.norm();
  if (std::abs(n - 1.0) > kNormTolerance) {
    throw std::runtime_error("statevector norm drifted to " +
                             std::to_string(n));
  }
  return state;
}

std::map<std::uint64_t, double> conditional_expectation_z_indexed(
    const StateVector& state, int data_qubit,
    const std::vector<int>& address_qubits) {
  if (data_qubit < 0 || data_qubit >= state.width()) {
    throw std::invalid_argument("data qubit outside register");
  }
  for (int a : address_qubits) {
    if (a < 0 || a >= state.width()) {
      throw std::invalid_argument("address qubit outside register");
    }
    if (a == data_qubit) {
      throw std::invalid_argument("data qubit may not be an address qubit");
    }
  }

  const std::size_t n_addr = address_qubits.size();
  std::vector<double> p_total(std::size_t{1} << n_addr, 0.0);
  std::vector<double> p_one(std::size_t{1} << n_addr, 0.0);
  const std::uint64_t data_mask = std::uint64_t{1} << data_qubit;

  for (std::uint64_t i = 0; i < state.size(); ++i) {
    const double p = std::norm(state.amp(i));
    if (p == 0.0) continue;
    const std::uint64_t key = gather_bits(i, address_qubits);
    p_total[key] += p;
    if (i & data_mask) p_one[key] += p;
  }

  std::map<std::uint64_t, double> out;
  for (std::uint64_t key = 0; key < p_total.size(); ++key) {
    if (p_total[key] <= kZeroProbability) continue;
    out[key] = 1.0 - 2.0 * p_one[key] / p_total[key];
  }
  return out;
}

std::map<std::string, double> conditional_expectation_z(
    const StateVector& state, int data_qubit,
    const std::vector<int>& address_qubits) {
  std::map<std::string, double> out;
  for (const auto& [key, value] :
       conditional_expectation_z_indexed(state, data_qubit, address_qubits)) {
    out[bitstring_from_pattern(key, address_qubits.size())] = value;
  }
  return out;
}

}  // namespace monarq
