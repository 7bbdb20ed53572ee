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

#include "monarq/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "monarq/rng.hpp"

namespace monarq {

namespace {

void check_measured(const StateVector& state, const std::vector<int>& measured) {
  if (measured.empty()) {
    throw std::invalid_argument("measurement list must not be empty");
  }
  for (int q : measured) {
    if (q < 0 || q >= state.width()) {
      throw std::invalid_argument("measured qubit outside register");
    }
  }
}

std::vector<double> cumulative(const std::vector<double>& probs) {
  std::vector<double> cdf(probs.size());
  double run = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    run += probs[i];
    cdf[i] = run;
  }
  return cdf;
}

std::uint64_t draw_bin(const std::vector<double>& cdf, std::mt19937_64& rng) {
  const double u = uniform_double(rng) * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return static_cast<std::uint64_t>(it - cdf.begin());
}

CountsTable bins_to_counts(const std::vector<std::uint64_t>& bins,
                           std::size_t bit_length, std::uint64_t shots) {
  CountsTable table;
  table.shots = shots;
  table.bit_length = bit_length;
  for (std::uint64_t bin = 0; bin < bins.size(); ++bin) {
    if (bins[bin] > 0) {
      table.counts[bitstring_from_pattern(bin, bit_length)] = bins[bin];
    }
  }
  return table;
}

// Measures one outcome directly from the amplitudes; used for noisy
// trajectories where each shot has its own state.
std::uint64_t sample_basis_index(const StateVector& state,
                                 std::mt19937_64& rng) {
  const double u = uniform_double(rng);
  double run = 0.0;
  std::uint64_t last_nonzero = 0;
  for (std::uint64_t i = 0; i < state.size(); ++i) {
    const double p = std::norm(state.amp(i));
    if (p > 0.0) last_nonzero = i;
    run += p;
    if (u < run) return i;
  }
  return last_nonzero;
}

}  // namespace

std::vector<double> marginal_probabilities(const StateVector& state,
                                           const std::vector<int>& measured_qubits) {
  check_measured(state, measured_qubits);
  std::vector<double> probs(std::size_t{1} << measured_qubits.size(), 0.0);
  for (std::uint64_t i = 0; i < state.size(); ++i) {
    const double p = std::norm(state.amp(i));
    if (p > 0.0) probs[gather_bits(i, measured_qubits)] += p;
  }
  return probs;
}

CountsTable sample_counts(const StateVector& state,
                          const std::vector<int>& measured_qubits,
                          std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("shot count must be at least 1");
  }
  const std::vector<double> cdf =
      cumulative(marginal_probabilities(state, measured_qubits));

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> bins(cdf.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    ++bins[draw_bin(cdf, rng)];
  }
  return bins_to_counts(bins, measured_qubits.size(), shots);
}

CountsTable run_noisy_trajectories(const Circuit& circuit,
                                   const NoiseConfig& noise,
                                   std::uint64_t shots) {
  if (noise.p2q < 0.0 || noise.p2q > 1.0) {
    throw std::invalid_argument("depolarizing probability must be in [0, 1]");
  }
  if (noise.p2q == 0.0) {
    return sample_counts(run_statevector(circuit), circuit.measured_qubits(),
                         shots, noise.seed);
  }
  if (shots < 1) {
    throw std::invalid_argument("shot count must be at least 1");
  }
  const std::vector<int>& measured = circuit.measured_qubits();
  const StateVector clean = run_statevector(circuit);
  check_measured(clean, measured);
  const std::vector<double> clean_cdf =
      cumulative(marginal_probabilities(clean, measured));

  std::mt19937_64 rng(noise.seed);
  std::vector<std::uint64_t> bins(clean_cdf.size(), 0);

  // (gate index, pauli pair code 1..15) events for the current shot.
  std::vector<std::pair<std::size_t, int>> events;
  const auto& gates = circuit.gates();

  for (std::uint64_t s = 0; s < shots; ++s) {
    events.clear();
    for (std::size_t g = 0; g < gates.size(); ++g) {
      if (!gates[g].is_two_qubit()) continue;
      if (uniform_double(rng) < noise.p2q) {
        const int code = static_cast<int>(uniform_below(rng, 15)) + 1;
        events.emplace_back(g, code);
      }
    }

    if (events.empty()) {
      ++bins[draw_bin(clean_cdf, rng)];
      continue;
    }

    StateVector state(circuit.width());
    std::size_t next_event = 0;
    for (std::size_t g = 0; g < gates.size(); ++g) {
      state.apply(gates[g]);
      while (next_event < events.size() && events[next_event].first == g) {
        const int code = events[next_event].second;
        const int pa = code >> 2;   // on q0
        const int pb = code & 3;    // on q1
        if (pa != 0) state.apply_pauli(pa, gates[g].q0);
        if (pb != 0) state.apply_pauli(pb, gates[g].q1);
        ++next_event;
      }
    }
    const std::uint64_t outcome = sample_basis_index(state, rng);
    ++bins[gather_bits(outcome, measured)];
  }
  return bins_to_counts(bins, measured.size(), shots);
}

}  // namespace monarq
