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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "monarq/circuit.hpp"
#include "monarq/errors.hpp"
#include "monarq/even.hpp"
#include "monarq/sampling.hpp"
#include "monarq/statevector.hpp"
#include "test_util.hpp"

using namespace monarq;

TEST_CASE("empty circuit leaves |0>") {
  Circuit c(1);
  StateVector s = run_statevector(c);
  CHECK(s.amp(0).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(s.amp(1)) == doctest::Approx(0.0));
}

TEST_CASE("hadamard on one qubit") {
  Circuit c(1);
  c.h(0);
  StateVector s = run_statevector(c);
  const double inv = 1.0 / std::sqrt(2.0);
  CHECK(s.amp(0).real() == doctest::Approx(inv).epsilon(1e-12));
  CHECK(s.amp(1).real() == doctest::Approx(inv).epsilon(1e-12));
}

TEST_CASE("ry encodes arccos convention") {
  // RY(arccos(0.5))|0> must give P(1) = 0.25, i.e. <Z> = 0.5.
  Circuit c(1);
  c.ry(std::acos(0.5), 0);
  StateVector s = run_statevector(c);
  CHECK(s.probability_of_one(0) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(s.expectation_z(0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("qubit 0 is the least significant index bit") {
  Circuit c(2);
  c.x(0);
  StateVector s = run_statevector(c);
  CHECK(std::abs(s.amp(1)) == doctest::Approx(1.0));  // index 0b01

  Circuit c2(2);
  c2.x(1);
  StateVector s2 = run_statevector(c2);
  CHECK(std::abs(s2.amp(2)) == doctest::Approx(1.0));  // index 0b10
}

TEST_CASE("cx and cz basics") {
  // CX(0 -> 1) on |01> gives |11>.
  Circuit c(2);
  c.x(0);
  c.cx(0, 1);
  StateVector s = run_statevector(c);
  CHECK(std::abs(s.amp(3)) == doctest::Approx(1.0));

  // CZ phases only the |11> component.
  Circuit c2(2);
  c2.h(0);
  c2.h(1);
  c2.cz(0, 1);
  StateVector s2 = run_statevector(c2);
  CHECK(s2.amp(3).real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(s2.amp(1).real() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("gate validation") {
  Circuit c(2);
  CHECK_THROWS_AS(c.h(2), std::invalid_argument);
  CHECK_THROWS_AS(c.cx(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(c.ry(std::nan(""), 0), std::invalid_argument);
  CHECK_THROWS_AS(c.set_measured({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Circuit(0), std::invalid_argument);
}

TEST_CASE("capacity guard honors the environment override") {
  CHECK_THROWS_AS(StateVector(max_qubits() + 1), CapacityError);
  setenv("MONARQ_MAX_QUBITS", "3", 1);
  CHECK(max_qubits() == 3);
  CHECK_THROWS_AS(StateVector(4), CapacityError);
  unsetenv("MONARQ_MAX_QUBITS");
  CHECK(max_qubits() == 22);
}

TEST_CASE("unitarity holds on random circuits") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int width = 1 + static_cast<int>(uniform_below(rng, 10));
    const std::size_t gates = uniform_below(rng, 101);
    StateVector s = run_statevector(test::random_circuit(rng, width, gates));
    CHECK(std::abs(s.norm() - 1.0) <= 1e-9);
  }
}

TEST_CASE("sampling a deterministic state") {
  Circuit c(1);
  StateVector s = run_statevector(c);
  CountsTable counts = sample_counts(s, {0}, 100, 5);
  CHECK(counts.shots == 100);
  CHECK(counts.counts.at("0") == 100);
  CHECK(counts.counts.size() == 1);
}

TEST_CASE("sampling matches the marginal at a million shots") {
  Circuit c(1);
  c.h(0);
  StateVector s = run_statevector(c);
  CountsTable counts = sample_counts(s, {0}, 1000000, 11);
  const double freq = static_cast<double>(counts.counts.at("0")) / 1e6;
  CHECK(std::abs(freq - 0.5) <= 0.002);  // 4 sigma of sqrt(p(1-p)/N)
}

TEST_CASE("sampling consistency on a random state") {
  std::mt19937_64 rng(23);
  Circuit c = test::random_circuit(rng, 4, 40);
  StateVector s = run_statevector(c);
  const std::vector<int> measured{0, 1, 2, 3};
  const std::vector<double> probs = marginal_probabilities(s, measured);
  const std::uint64_t shots = 1000000;
  CountsTable counts = sample_counts(s, measured, shots, 17);
  for (std::size_t k = 0; k < probs.size(); ++k) {
    const std::string key = bitstring_from_pattern(k, 4);
    const double observed =
        counts.counts.count(key)
            ? static_cast<double>(counts.counts.at(key)) / shots
            : 0.0;
    const double bound =
        5.0 * std::sqrt(probs[k] * (1.0 - probs[k]) / shots) + 1e-9;
    CHECK(std::abs(observed - probs[k]) <= bound);
  }
}

TEST_CASE("same seed reproduces the counts table") {
  std::mt19937_64 rng(3);
  Circuit c = test::random_circuit(rng, 5, 30);
  StateVector s = run_statevector(c);
  CountsTable a = sample_counts(s, {0, 2, 4}, 5000, 99);
  CountsTable b = sample_counts(s, {0, 2, 4}, 5000, 99);
  CHECK(a.counts == b.counts);
  CHECK(a.shots == b.shots);
}

TEST_CASE("sampling rejects an empty measurement list") {
  Circuit c(1);
  StateVector s = run_statevector(c);
  CHECK_THROWS_AS(sample_counts(s, {}, 10, 0), std::invalid_argument);
}

TEST_CASE("unmeasured qubits are traced out") {
  Circuit c(2);
  c.h(1);  // qubit 1 in superposition, qubit 0 stays |0>
  StateVector s = run_statevector(c);
  CountsTable counts = sample_counts(s, {0}, 2000, 4);
  CHECK(counts.counts.at("0") == 2000);
  CHECK(counts.bit_length == 1);
}

TEST_CASE("conditional expectation on product states") {
  // |00>: data qubit 0 conditioned on address qubit 1.
  Circuit c(2);
  StateVector s = run_statevector(c);
  auto by_address = conditional_expectation_z(s, 0, {1});
  CHECK(by_address.size() == 1);
  CHECK(by_address.at("0") == doctest::Approx(1.0));
}

TEST_CASE("empty address list yields the unconditioned expectation") {
  Circuit c(2);
  c.ry(std::acos(0.5), 0);
  c.h(1);
  StateVector s = run_statevector(c);
  auto unconditioned = conditional_expectation_z(s, 0, {});
  CHECK(unconditioned.size() == 1);
  CHECK(unconditioned.at("") == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("conditional expectation omits zero-probability addresses") {
  Circuit c(2);
  c.x(1);
  StateVector s = run_statevector(c);
  auto by_address = conditional_expectation_z(s, 0, {1});
  CHECK(by_address.size() == 1);
  CHECK(by_address.count("1") == 1);
}

TEST_CASE("conditional map refuses overlapping qubits") {
  Circuit c(2);
  StateVector s = run_statevector(c);
  CHECK_THROWS_AS(conditional_expectation_z(s, 0, {0}), std::invalid_argument);
}

TEST_CASE("weighted mean of conditionals equals the unconditioned value") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = test::random_circuit(rng, 5, 60);
    StateVector s = run_statevector(c);
    const int data = 4;
    const std::vector<int> addresses{0, 1, 2, 3};
    const auto by_address =
        conditional_expectation_z_indexed(s, data, addresses);
    const std::vector<double> weights = marginal_probabilities(s, addresses);
    double mean = 0.0;
    for (const auto& [address, value] : by_address) {
      mean += weights[address] * value;
    }
    CHECK(mean == doctest::Approx(s.expectation_z(data)).epsilon(1e-12));
  }
}

TEST_CASE("noiseless trajectories match plain sampling exactly") {
  std::mt19937_64 rng(13);
  Circuit c = test::random_circuit(rng, 4, 30);
  c.set_measured({0, 1, 2, 3});
  StateVector s = run_statevector(c);
  CountsTable direct = sample_counts(s, {0, 1, 2, 3}, 4000, 77);
  CountsTable trajectories = run_noisy_trajectories(c, {0.0, 77}, 4000);
  CHECK(direct.counts == trajectories.counts);
}

TEST_CASE("full depolarization scrambles a bell pair") {
  // H, CX, then a guaranteed random non-identity Pauli per shot. The
  // analytic outcome distribution of the 15-Pauli twirl is (7/30, 4/15,
  // 4/15, 7/30) over 00,01,10,11.
  Circuit c(2);
  c.h(0);
  c.cx(0, 1);
  c.set_measured({0, 1});
  const std::uint64_t shots = 100000;
  CountsTable counts = run_noisy_trajectories(c, {1.0, 21}, shots);
  const double p_same = 7.0 / 30.0;
  const double p_diff = 4.0 / 15.0;
  const std::vector<std::pair<std::string, double>> expected{
      {"00", p_same}, {"01", p_diff}, {"10", p_diff}, {"11", p_same}};
  for (const auto& [key, p] : expected) {
    const double freq = static_cast<double>(counts.counts.at(key)) / shots;
    CHECK(std::abs(freq - p) <= 4.0 * std::sqrt(p * (1.0 - p) / shots));
    CHECK(std::abs(freq - 0.25) <= 0.03);  // near-uniform
  }
}

TEST_CASE("noisy trajectories are deterministic for a fixed seed") {
  Circuit c(3);
  c.h(0);
  c.cx(0, 1);
  c.cx(1, 2);
  c.set_measured({0, 1, 2});
  CountsTable a = run_noisy_trajectories(c, {0.05, 5}, 3000);
  CountsTable b = run_noisy_trajectories(c, {0.05, 5}, 3000);
  CHECK(a.counts == b.counts);
}

TEST_CASE("noise probability is validated") {
  Circuit c(2);
  c.cx(0, 1);
  c.set_measured({0, 1});
  CHECK_THROWS_AS(run_noisy_trajectories(c, {1.5, 0}, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_noisy_trajectories(c, {-0.1, 0}, 10),
                  std::invalid_argument);
}
