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
#include <numbers>

#include "monarq/analysis.hpp"
#include "monarq/errors.hpp"
#include "monarq/pipelines.hpp"
#include "test_util.hpp"

using namespace monarq;

TEST_CASE("conv: all-ones inputs give all ones") {
  const std::vector<double> ones(8, 1.0);
  const PipelineJob job = build_conv(ones, ones);
  const SeriesEstimate series =
      decode_series(job, execute_job(job, 0, 0), ones.size());
  for (double v : series.values) {
    CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("conv: identity operand returns the other sequence") {
  std::mt19937_64 rng(1);
  const std::vector<double> ones(8, 1.0);
  const std::vector<double> g = test::random_values(rng, 8);
  const PipelineJob job = build_conv(ones, g);
  const SeriesEstimate series =
      decode_series(job, execute_job(job, 0, 0), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(series.values[i] == doctest::Approx(g[i]).epsilon(1e-9));
  }
}

TEST_CASE("conv: exact decode matches the pointwise oracle at length 32") {
  std::mt19937_64 rng(2);
  const std::vector<double> f = test::random_values(rng, 32);
  const std::vector<double> g = test::random_values(rng, 32);
  const PipelineJob job = build_conv(f, g);
  CHECK(job.circuit.two_qubit_gate_count() == 2 * 32 + 1);
  const SeriesEstimate series =
      decode_series(job, execute_job(job, 0, 0), f.size());
  const std::vector<double> truth = oracle_pointwise_product(f, g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(std::abs(series.values[i] - truth[i]) <= 1e-9);
  }
}

TEST_CASE("conv: validation") {
  CHECK_THROWS_AS(build_conv({0.1}, {0.1, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(build_conv({1.5}, {0.1}), std::invalid_argument);
  CHECK_THROWS_AS(build_conv({}, {}), std::invalid_argument);
}

TEST_CASE("conv: non-power-of-two length is padded away") {
  std::mt19937_64 rng(3);
  const std::vector<double> f = test::random_values(rng, 5);
  const std::vector<double> g = test::random_values(rng, 5);
  const PipelineJob job = build_conv(f, g);
  CHECK(job.layout.slots() == 8);
  const SeriesEstimate series =
      decode_series(job, execute_job(job, 0, 0), f.size());
  const std::vector<double> truth = oracle_pointwise_product(f, g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(std::abs(series.values[i] - truth[i]) <= 1e-9);
  }
}

TEST_CASE("chirp signal contract") {
  const std::vector<double> h = chirp_signal(512, 0.02, 0.2);
  CHECK(h.size() == 512);
  double peak = 0.0;
  for (double v : h) {
    CHECK(std::abs(v) <= 1.0);
    peak = std::max(peak, std::abs(v));
  }
  CHECK(peak == doctest::Approx(1.0));
  CHECK_THROWS_AS(chirp_signal(512, 0.1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(chirp_signal(512, 0.0, 0.2), std::invalid_argument);
  CHECK_THROWS_AS(chirp_signal(512, 0.1, 0.6), std::invalid_argument);
  CHECK_THROWS_AS(chirp_signal(1, 0.1, 0.2), std::invalid_argument);
}

TEST_CASE("dtft: zero signal gives zero components") {
  const std::vector<double> h(16, 0.0);
  const PipelineJob job = build_dtft(h, {{0.3}, {0.7}});
  const std::vector<DtftPoint> points = dtft_points(job, execute_job(job, 0, 0));
  for (const DtftPoint& p : points) {
    CHECK(std::abs(p.in_phase) <= 1e-9);
    CHECK(std::abs(p.quadrature) <= 1e-9);
  }
}

TEST_CASE("dtft: pure cosine peaks at its own frequency") {
  const std::size_t length = 64;
  const double omega0 = 2.0 * std::numbers::pi * 8.0 / length;
  std::vector<double> h(length);
  for (std::size_t t = 0; t < length; ++t) {
    h[t] = std::cos(omega0 * static_cast<double>(t));
  }
  const PipelineJob job = build_dtft(h, {{omega0}});
  const std::vector<DtftPoint> points = dtft_points(job, execute_job(job, 0, 0));
  CHECK(points[0].in_phase == doctest::Approx(length / 2.0).epsilon(1e-9));
  CHECK(std::abs(points[0].quadrature) <= 1e-6);
}

TEST_CASE("dtft: exact run matches the classical oracle") {
  std::mt19937_64 rng(4);
  const std::vector<double> h = test::random_values(rng, 32);
  const std::vector<FrequencyProbe> probes{{0.21}, {0.9}, {2.4}};
  const PipelineJob job = build_dtft(h, probes);
  CHECK(job.circuit.two_qubit_gate_count() == (2 * 3 + 1) * 32 + 2 * 3);
  const std::vector<DtftPoint> points = dtft_points(job, execute_job(job, 0, 0));
  for (std::size_t m = 0; m < probes.size(); ++m) {
    const auto [oi, oq] = oracle_dtft(h, probes[m].omega);
    CHECK(std::abs(points[m].in_phase - oi) <= 1e-9);
    CHECK(std::abs(points[m].quadrature - oq) <= 1e-9);
  }
}

TEST_CASE("dtft: in-situ average equals the weighted per-address mean") {
  std::mt19937_64 rng(5);
  const std::vector<double> h = test::random_values(rng, 16);
  const PipelineJob job = build_dtft(h, {{1.1}});
  StateVector s = run_statevector(job.circuit);

  const int tap = job.result_taps[0].result_qubit;
  const auto by_address =
      conditional_expectation_z_indexed(s, tap, job.layout.address_qubits());
  const std::vector<double> weights =
      marginal_probabilities(s, job.layout.address_qubits());
  double mean = 0.0;
  for (const auto& [address, value] : by_address) {
    mean += weights[address] * value;
  }
  CHECK(mean == doctest::Approx(s.expectation_z(tap)).epsilon(1e-12));
}

TEST_CASE("dtft: capacity error suggests fewer probes") {
  const std::vector<double> h(512, 0.0);
  std::vector<FrequencyProbe> probes(8);
  for (std::size_t m = 0; m < probes.size(); ++m) {
    probes[m].omega = 0.1 * static_cast<double>(m + 1);
  }
  // 9 + 17 = 26 qubits, beyond the default limit of 22.
  CHECK_THROWS_AS(build_dtft(h, probes), CapacityError);
  CHECK_THROWS_AS(build_dtft({0.1, 0.2, 0.3}, {{0.5}}), std::invalid_argument);
}

TEST_CASE("sqgrad: constant strip has zero gradient") {
  const std::vector<double> strip(16, 0.6);
  const PipelineJob job = build_sqgrad(strip);
  const SeriesEstimate series =
      decode_series(job, execute_job(job, 0, 0), strip.size());
  for (double v : series.values) {
    CHECK(std::abs(v) <= 1e-9);
  }
}

TEST_CASE("sqgrad: hand-evaluated step strip") {
  const std::vector<double> strip{-1.0, 0.0, 1.0, 1.0};
  const PipelineJob job = build_sqgrad(strip);
  const SeriesEstimate series =
      decode_series(job, execute_job(job, 0, 0), strip.size());
  const std::vector<double> want{0.25, 1.0, 0.25, 0.0};
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(series.values[i] == doctest::Approx(want[i]).epsilon(1e-9));
  }
}

TEST_CASE("sqgrad: random strip matches the oracle") {
  std::mt19937_64 rng(6);
  const std::vector<double> strip = test::random_values(rng, 16);
  const PipelineJob job = build_sqgrad(strip);
  CHECK(job.circuit.two_qubit_gate_count() == 4 * 16 + 5);
  const SeriesEstimate series =
      decode_series(job, execute_job(job, 0, 0), strip.size());
  const std::vector<double> truth = oracle_sqgrad(strip);
  for (std::size_t i = 0; i < strip.size(); ++i) {
    CHECK(std::abs(series.values[i] - truth[i]) <= 1e-9);
  }
  CHECK_THROWS_AS(build_sqgrad({0.1, 0.2, 0.3}), std::invalid_argument);
}

namespace {

GrayImage step_image(int width, int height, int step_col) {
  GrayImage img = GrayImage::filled(width, height, -1.0);
  for (int y = 0; y < height; ++y) {
    for (int x = step_col; x < width; ++x) img.at(x, y) = 1.0;
  }
  return img;
}

}  // namespace

TEST_CASE("edge: constant tile yields a negative EV everywhere") {
  GrayImage img = GrayImage::filled(8, 8, 0.25);
  const TilePlan plan = plan_tiles(img, 8, 8, 1);
  const double threshold = 1.0;
  const PipelineJob job = build_edge_tile(plan.tiles[0].patch, threshold);
  const SeriesEstimate series = decode_series(job, execute_job(job, 0, 0), 64);
  const double w = edge_weight_from_threshold(threshold);
  for (double v : series.values) {
    CHECK(v == doctest::Approx(-w).epsilon(1e-9));
    CHECK(v < 0.0);
  }
}

TEST_CASE("edge: full-contrast step flags the step columns only") {
  GrayImage img = step_image(8, 8, 4);
  const TilePlan plan = plan_tiles(img, 8, 8, 1);
  const double threshold = 1.0;
  const PipelineJob job = build_edge_tile(plan.tiles[0].patch, threshold);
  const SeriesEstimate series = decode_series(job, execute_job(job, 0, 0), 64);
  const EdgeOracle oracle = oracle_edge(img, threshold);
  bool any_edge = false;
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * 8 + x;
      CHECK((series.values[i] > 0.0) == (oracle.mask[i] == 1));
      if (series.values[i] > 0.0) {
        any_edge = true;
        CHECK((x == 3 || x == 4));
      }
    }
  }
  CHECK(any_edge);
}

TEST_CASE("edge: exact EV equals the classical formula on a random tile") {
  std::mt19937_64 rng(7);
  GrayImage img = GrayImage::filled(8, 8, 0.0);
  img.pixels = test::random_values(rng, 64);
  const TilePlan plan = plan_tiles(img, 8, 8, 1);
  const double threshold = 0.8;
  const PipelineJob job = build_edge_tile(plan.tiles[0].patch, threshold);
  CHECK(job.circuit.two_qubit_gate_count() == 8 * 64 + 15);
  const SeriesEstimate series = decode_series(job, execute_job(job, 0, 0), 64);
  const EdgeOracle oracle = oracle_edge(img, threshold);
  for (std::size_t i = 0; i < 64; ++i) {
    CHECK(std::abs(series.values[i] - oracle.ev[i]) <= 1e-9);
  }
}

TEST_CASE("edge: threshold equivalence with the raw-difference criterion") {
  std::mt19937_64 rng(8);
  GrayImage img = GrayImage::filled(4, 4, 0.0);
  img.pixels = test::random_values(rng, 16);
  const double threshold = 1.3;
  const EdgeOracle oracle = oracle_edge(img, threshold);
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 4; ++x) {
      const double gx = img.at_clamped(x + 1, y) - img.at_clamped(x - 1, y);
      const double gy = img.at_clamped(x, y + 1) - img.at_clamped(x, y - 1);
      const bool classical = gx * gx + gy * gy > threshold;
      CHECK(classical == (oracle.mask[static_cast<std::size_t>(y) * 4 + x] == 1));
    }
  }
}

TEST_CASE("edge: weight validation") {
  GrayImage img = GrayImage::filled(4, 4, 0.0);
  const TilePlan plan = plan_tiles(img, 4, 4, 1);
  CHECK_THROWS_AS(build_edge_tile(plan.tiles[0].patch, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_edge_tile(plan.tiles[0].patch, 8.0),
                  std::invalid_argument);
  // 5x5 interior tiles are not a power of two.
  GrayImage odd = GrayImage::filled(5, 5, 0.0);
  const TilePlan odd_plan = plan_tiles(odd, 5, 5, 1);
  CHECK_THROWS_AS(build_edge_tile(odd_plan.tiles[0].patch, 1.0),
                  std::invalid_argument);
}

TEST_CASE("tile plan covers the image once with clamped halos") {
  GrayImage img = GrayImage::filled(4, 2, 0.0);
  for (int y = 0; y < 2; ++y) {
    for (int x = 0; x < 4; ++x) img.at(x, y) = 0.1 * (y * 4 + x);
  }
  const TilePlan plan = plan_tiles(img, 2, 2, 1);
  CHECK(plan.tiles.size() == 2);
  // Left tile: halo col -1 replicates col 0; interior matches the image.
  const Tile& left = plan.tiles[0];
  CHECK(left.patch.at(0, 1) == doctest::Approx(img.at(0, 0)));
  CHECK(left.patch.at(1, 1) == doctest::Approx(img.at(0, 0)));
  // Right halo of the left tile sees the true neighbor from the right tile.
  CHECK(left.patch.at(3, 1) == doctest::Approx(img.at(2, 0)));
  CHECK_THROWS_AS(plan_tiles(img, 3, 2, 1), std::invalid_argument);
}

TEST_CASE("stitching copies interiors and reports missing tiles") {
  GrayImage img = GrayImage::filled(4, 2, 0.0);
  const TilePlan plan = plan_tiles(img, 2, 2, 1);
  std::map<int, std::vector<double>> results;
  results[0] = {1, 2, 3, 4};
  CHECK_THROWS_AS(tile_and_stitch(img, plan, results), IncompleteResultError);
  results[1] = {5, 6, 7, 8};
  const std::vector<double> full = tile_and_stitch(img, plan, results);
  CHECK(full == std::vector<double>{1, 2, 5, 6, 3, 4, 7, 8});

  // Single tile covering the whole image is the identity stitch.
  const TilePlan whole = plan_tiles(img, 4, 2, 1);
  std::map<int, std::vector<double>> one;
  one[0] = {1, 2, 3, 4, 5, 6, 7, 8};
  CHECK(tile_and_stitch(img, whole, one) == one[0]);
}

TEST_CASE("a 192x128 image splits into 24 tiles of 1024 pixels and stitches back") {
  std::mt19937_64 rng(14);
  GrayImage img = GrayImage::filled(192, 128, 0.0);
  img.pixels = test::random_values(rng, img.pixels.size());
  const TilePlan plan = plan_tiles(img, 32, 32, 1);
  REQUIRE(plan.tiles.size() == 24);

  // Feed each tile its own interior back; stitching must reproduce the
  // image exactly once.
  std::map<int, std::vector<double>> per_tile;
  for (const Tile& tile : plan.tiles) {
    std::vector<double> interior;
    interior.reserve(32 * 32);
    for (int y = 0; y < 32; ++y) {
      for (int x = 0; x < 32; ++x) {
        interior.push_back(tile.patch.at(x + 1, y + 1));
      }
    }
    per_tile[tile.id] = std::move(interior);
  }
  CHECK(tile_and_stitch(img, plan, per_tile) == img.pixels);
}

TEST_CASE("sqgrad over an image equals per-strip oracles") {
  std::mt19937_64 rng(9);
  GrayImage img = GrayImage::filled(8, 4, 0.0);
  img.pixels = test::random_values(rng, 32);
  const StitchedResult res = run_sqgrad_image(img, 4, {});
  const std::vector<double> truth = oracle_sqgrad_image(img, 4);
  REQUIRE(res.values.size() == truth.size());
  CHECK(res.circuits == 8);
  for (std::size_t i = 0; i < truth.size(); ++i) {
    CHECK(std::abs(res.values[i] - truth[i]) <= 1e-9);
  }
}

TEST_CASE("worker count does not change a sampled tiled run") {
  std::mt19937_64 rng(13);
  GrayImage img = GrayImage::filled(8, 4, 0.0);
  img.pixels = test::random_values(rng, 32);
  ImageRunOptions serial;
  serial.shots = 4000;
  serial.seed = 99;
  serial.parallelism = 1;
  ImageRunOptions threaded = serial;
  threaded.parallelism = 4;
  const StitchedResult a = run_sqgrad_image(img, 4, serial);
  const StitchedResult b = run_sqgrad_image(img, 4, threaded);
  CHECK(a.values == b.values);
  CHECK(a.std_errs == b.std_errs);
}

TEST_CASE("edge over an image equals the whole-image oracle") {
  GrayImage img = step_image(8, 4, 3);
  ImageRunOptions options;
  const StitchedResult res = run_edge_image(img, 4, 4, 1.0, options);
  const EdgeOracle oracle = oracle_edge(img, 1.0);
  for (std::size_t i = 0; i < oracle.ev.size(); ++i) {
    CHECK(std::abs(res.values[i] - oracle.ev[i]) <= 1e-9);
  }
}

TEST_CASE("execute_job: sampled conv estimates carry error bars") {
  std::mt19937_64 rng(10);
  const std::vector<double> f = test::random_values(rng, 8);
  const std::vector<double> g = test::random_values(rng, 8);
  const PipelineJob job = build_conv(f, g);
  const JobResult result = execute_job(job, 32000, 7);
  const SeriesEstimate series = decode_series(job, result, f.size());
  const std::vector<double> truth = oracle_pointwise_product(f, g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(series.std_errs[i] > 0.0);
    CHECK(std::abs(series.values[i] - truth[i]) <= 5.0 * series.std_errs[i]);
  }
}

TEST_CASE("execute_job: exact mode with noise configured is rejected") {
  const PipelineJob job = build_conv({0.5}, {0.5});
  CHECK_THROWS_AS(execute_job(job, 0, 0, NoiseConfig{0.01, 0}),
                  std::invalid_argument);
}

TEST_CASE("execute_job: determinism under a fixed seed") {
  std::mt19937_64 rng(11);
  const std::vector<double> f = test::random_values(rng, 8);
  const std::vector<double> g = test::random_values(rng, 8);
  const PipelineJob job = build_conv(f, g);
  const SeriesEstimate a =
      decode_series(job, execute_job(job, 5000, 123), f.size());
  const SeriesEstimate b =
      decode_series(job, execute_job(job, 5000, 123), f.size());
  CHECK(a.values == b.values);
  CHECK(a.std_errs == b.std_errs);
}

TEST_CASE("noise attenuates but does not flip the conv output") {
  std::mt19937_64 rng(12);
  const std::vector<double> f = test::random_values(rng, 16);
  const std::vector<double> g = test::random_values(rng, 16);
  const PipelineJob job = build_conv(f, g);
  const SeriesEstimate clean =
      decode_series(job, execute_job(job, 0, 0), f.size());
  for (double p2q : {0.01, 0.05}) {
    const JobResult noisy_result =
        execute_job(job, 64000, 3, NoiseConfig{p2q, 3});
    const SeriesEstimate noisy = decode_series(job, noisy_result, f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(std::abs(noisy.values[i]) <=
            std::abs(clean.values[i]) + 5.0 * noisy.std_errs[i] + 1e-12);
    }
  }
}
