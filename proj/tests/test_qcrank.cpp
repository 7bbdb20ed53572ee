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
#include <utility>

#include "monarq/analysis.hpp"
#include "monarq/qcrank.hpp"
#include "test_util.hpp"

using namespace monarq;

TEST_CASE("layout planning") {
  QcrankLayout conv = plan_layout(32, 2);
  CHECK(conv.n_a == 5);
  CHECK(conv.total_qubits() == 7);

  QcrankLayout dft = plan_layout(512, 11);
  CHECK(dft.n_a == 9);
  CHECK(dft.total_qubits() == 20);

  QcrankLayout tiny = plan_layout(1, 1);
  CHECK(tiny.n_a == 1);
  CHECK(tiny.slots() == 2);

  CHECK_THROWS_AS(plan_layout(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(plan_layout(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(plan_layout(4, 1, 1.5), std::invalid_argument);
}

TEST_CASE("padding fills trailing slots") {
  QcrankLayout layout = plan_layout(3, 1, 0.25);
  DataMatrix data = DataMatrix::from_sequences(layout, {{0.1, 0.2, 0.3}});
  CHECK(data.value(0, 2) == doctest::Approx(0.3));
  CHECK(data.value(0, 3) == doctest::Approx(0.25));
}

TEST_CASE("data matrix validates shape and range") {
  QcrankLayout layout = plan_layout(2, 1);
  CHECK_THROWS_AS(DataMatrix::from_sequences(layout, {{0.1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(DataMatrix::from_sequences(layout, {{0.1, 1.2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(DataMatrix::from_sequences(layout, {{0.1, 0.2}, {0.0, 0.0}}),
                  std::invalid_argument);
}

TEST_CASE("ucr angles of a constant collapse to one rotation") {
  const std::vector<double> thetas(8, 0.77);
  const std::vector<double> phis = ucr_angles(thetas);
  CHECK(phis[0] == doctest::Approx(0.77));
  for (std::size_t k = 1; k < phis.size(); ++k) {
    CHECK(phis[k] == doctest::Approx(0.0));
  }
}

TEST_CASE("ucr angles match the 2x2 transform by hand") {
  const std::vector<double> phis = ucr_angles({0.3, 0.9});
  CHECK(phis[0] == doctest::Approx(0.6));   // (a + b) / 2
  CHECK(phis[1] == doctest::Approx(-0.3));  // (a - b) / 2
}

TEST_CASE("ucr angles reject non-power-of-two input") {
  CHECK_THROWS_AS(ucr_angles({0.1, 0.2, 0.3}), std::invalid_argument);
  CHECK_THROWS_AS(ucr_angles({}), std::invalid_argument);
}

TEST_CASE("encode-decode roundtrip is exact over the size grid") {
  std::mt19937_64 rng(2024);
  for (int n_a = 1; n_a <= 6; ++n_a) {
    for (int n_d = 1; n_d <= 4; ++n_d) {
      const std::size_t length = std::size_t{1} << n_a;
      QcrankLayout layout = plan_layout(length, n_d);
      std::vector<std::vector<double>> data(n_d);
      for (auto& row : data) row = test::random_values(rng, length);
      Circuit circuit =
          build_qcrank(layout, DataMatrix::from_sequences(layout, data));
      const auto decoded = decode_qcrank_exact(run_statevector(circuit), layout);
      for (int j = 0; j < n_d; ++j) {
        for (std::size_t i = 0; i < length; ++i) {
          CHECK(std::abs(decoded[j][i] - data[j][i]) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("two-qubit gate count is n_d * 2^n_a") {
  std::mt19937_64 rng(5);
  for (const auto& [length, n_d] : std::vector<std::pair<std::size_t, int>>{
           {2, 1}, {8, 3}, {16, 4}, {512, 11}}) {
    QcrankLayout layout = plan_layout(length, n_d);
    std::vector<std::vector<double>> data(n_d);
    for (auto& row : data) row = test::random_values(rng, length);
    Circuit circuit =
        build_qcrank(layout, DataMatrix::from_sequences(layout, data));
    CHECK(circuit.two_qubit_gate_count() ==
          layout.slots() * static_cast<std::size_t>(n_d));
  }
}

TEST_CASE("constant ones decode to one at both addresses") {
  QcrankLayout layout = plan_layout(2, 1);
  Circuit circuit =
      build_qcrank(layout, DataMatrix::from_sequences(layout, {{1.0, 1.0}}));
  const auto decoded = decode_qcrank_exact(run_statevector(circuit), layout);
  CHECK(decoded[0][0] == doctest::Approx(1.0));
  CHECK(decoded[0][1] == doctest::Approx(1.0));
}

TEST_CASE("channels are independent") {
  std::mt19937_64 rng(8);
  const std::size_t length = 8;
  QcrankLayout layout = plan_layout(length, 3);
  std::vector<std::vector<double>> data(3);
  for (auto& row : data) row = test::random_values(rng, length);

  Circuit full = build_qcrank(layout, DataMatrix::from_sequences(layout, data));
  auto zeroed_data = data;
  for (double& v : zeroed_data[1]) v = 0.0;
  Circuit zeroed =
      build_qcrank(layout, DataMatrix::from_sequences(layout, zeroed_data));

  const auto full_decode = decode_qcrank_exact(run_statevector(full), layout);
  const auto zero_decode = decode_qcrank_exact(run_statevector(zeroed), layout);
  for (int j : {0, 2}) {
    for (std::size_t i = 0; i < length; ++i) {
      CHECK(std::abs(full_decode[j][i] - zero_decode[j][i]) <= 1e-12);
    }
  }
}

TEST_CASE("sampled decode stays within 4 sigma") {
  QcrankLayout layout = plan_layout(2, 1);
  Circuit circuit =
      build_qcrank(layout, DataMatrix::from_sequences(layout, {{0.5, -0.5}}));
  measure_all_qcrank(circuit, layout);
  StateVector state = run_statevector(circuit);

  // Exact conditionals first.
  const auto exact = decode_qcrank_exact(state, layout);
  CHECK(exact[0][0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(exact[0][1] == doctest::Approx(-0.5).epsilon(1e-12));

  // The unconditioned value is the in-situ average of +-0.5.
  CHECK(state.expectation_z(layout.data_qubit(0)) ==
        doctest::Approx(0.0).epsilon(1e-12));

  CountsTable counts =
      sample_counts(state, circuit.measured_qubits(), 1000000, 41);
  const QcrankDecode decoded = decode_qcrank(counts, layout);
  REQUIRE(decoded[0][0].has_value());
  REQUIRE(decoded[0][1].has_value());
  CHECK(std::abs(decoded[0][0]->x_hat - 0.5) <= 4.0 * decoded[0][0]->std_err);
  CHECK(std::abs(decoded[0][1]->x_hat + 0.5) <= 4.0 * decoded[0][1]->std_err);
}

TEST_CASE("uniform counts decode to zero") {
  QcrankLayout layout = plan_layout(2, 1);
  CountsTable counts;
  counts.bit_length = 2;
  counts.counts["00"] = 25;
  counts.counts["10"] = 25;
  counts.counts["01"] = 25;
  counts.counts["11"] = 25;
  counts.shots = 100;
  const QcrankDecode decoded = decode_qcrank(counts, layout);
  CHECK(decoded[0][0]->x_hat == doctest::Approx(0.0));
  CHECK(decoded[0][1]->x_hat == doctest::Approx(0.0));
}

TEST_CASE("addresses without shots decode to nullopt") {
  QcrankLayout layout = plan_layout(2, 1);
  CountsTable counts;
  counts.bit_length = 2;
  counts.counts["00"] = 10;  // only address 0 observed
  counts.shots = 10;
  const QcrankDecode decoded = decode_qcrank(counts, layout);
  CHECK(decoded[0][0].has_value());
  CHECK_FALSE(decoded[0][1].has_value());
}

TEST_CASE("decode rmse follows the shot-noise law") {
  std::mt19937_64 rng(1234);
  const std::size_t length = 32;
  const std::vector<double> values = test::random_values(rng, length);
  QcrankLayout layout = plan_layout(length, 1);
  Circuit circuit =
      build_qcrank(layout, DataMatrix::from_sequences(layout, {values}));
  measure_all_qcrank(circuit, layout);
  StateVector state = run_statevector(circuit);

  // rmse^2 * N should be flat; average a few repeats per shot count.
  const std::vector<std::uint64_t> shot_grid{1000, 10000, 100000, 1000000};
  const int repeats = 24;
  std::vector<double> scaled;
  std::uint64_t stream = 0;
  for (std::uint64_t shots : shot_grid) {
    double mean_sq = 0.0;
    for (int r = 0; r < repeats; ++r) {
      CountsTable counts = sample_counts(state, circuit.measured_qubits(),
                                         shots, derive_stream_seed(9, stream++));
      const QcrankDecode decoded = decode_qcrank(counts, layout);
      double sum = 0.0;
      for (std::size_t i = 0; i < length; ++i) {
        REQUIRE(decoded[0][i].has_value());
        const double e = decoded[0][i]->x_hat - values[i];
        sum += e * e;
      }
      mean_sq += sum / static_cast<double>(length);
    }
    mean_sq /= repeats;
    scaled.push_back(mean_sq * static_cast<double>(shots));
  }
  double mean = 0.0;
  for (double v : scaled) mean += v;
  mean /= static_cast<double>(scaled.size());
  for (double v : scaled) {
    CHECK(std::abs(v - mean) / mean < 0.10);
  }
}
