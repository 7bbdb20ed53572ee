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

#include "monarq/pipelines.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "monarq/errors.hpp"
#include "monarq/rng.hpp"

namespace monarq {

namespace {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

void check_range(const std::vector<double>& values, const char* what) {
  for (double v : values) {
    if (!(std::abs(v) <= 1.0)) {
      throw std::invalid_argument(std::string(what) + " value " +
                                  std::to_string(v) + " outside [-1, 1]");
    }
  }
}

void check_capacity(int qubits, const std::string& hint = "") {
  if (qubits > max_qubits()) {
    throw CapacityError(qubits, max_qubits(), hint);
  }
}

std::vector<int> job_measured_qubits(const QcrankLayout& layout,
                                     bool measure_addresses,
                                     const std::vector<ArithmeticTap>& taps) {
  std::vector<int> measured;
  if (measure_addresses) measured = layout.address_qubits();
  for (const ArithmeticTap& tap : taps) measured.push_back(tap.result_qubit);
  return measured;
}

// Shifted copies with the strip's own ends replicated.
std::vector<double> shift_backward(const std::vector<double>& strip) {
  std::vector<double> out(strip.size());
  for (std::size_t i = 0; i < strip.size(); ++i) {
    out[i] = strip[i == 0 ? 0 : i - 1];
  }
  return out;
}

std::vector<double> shift_forward(const std::vector<double>& strip) {
  std::vector<double> out(strip.size());
  for (std::size_t i = 0; i < strip.size(); ++i) {
    out[i] = strip[i + 1 == strip.size() ? i : i + 1];
  }
  return out;
}

// Generic bounded-parallelism map over tile indices. Each task owns its
// slot of the output, so no synchronization beyond the work queue.
template <typename Fn>
void parallel_for_index(std::size_t count, int parallelism, Fn&& fn) {
  int workers = parallelism > 0
                    ? parallelism
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min<std::size_t>(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next.fetch_add(1); i < count;
           i = next.fetch_add(1)) {
        fn(i);
      }
    }));
  }
  for (auto& f : futures) f.get();
}

}  // namespace

JobResult execute_job(const PipelineJob& job, std::uint64_t shots,
                      std::uint64_t seed,
                      const std::optional<NoiseConfig>& noise) {
  if (job.result_taps.empty()) {
    throw std::invalid_argument("job has no result taps");
  }
  if (shots == 0 && noise.has_value() && noise->p2q > 0.0) {
    throw std::invalid_argument(
        "noisy execution needs a shot count; exact mode is noiseless");
  }

  JobResult result;
  result.shots = shots;
  result.taps.resize(job.result_taps.size());

  if (shots == 0) {
    const StateVector state = run_statevector(job.circuit);
    const std::vector<int> addresses =
        job.measure_addresses ? job.layout.address_qubits() : std::vector<int>{};
    for (std::size_t t = 0; t < job.result_taps.size(); ++t) {
      const auto by_address = conditional_expectation_z_indexed(
          state, job.result_taps[t].result_qubit, addresses);
      for (const auto& [address, value] : by_address) {
        result.taps[t][address] = EvenEstimate{value, 0.0, 0, false};
      }
    }
    return result;
  }

  CountsTable counts;
  if (noise.has_value() && noise->p2q > 0.0) {
    counts = run_noisy_trajectories(job.circuit, *noise, shots);
  } else {
    counts = sample_counts(run_statevector(job.circuit),
                           job.circuit.measured_qubits(), shots, seed);
  }

  const std::size_t n_addr_bits =
      job.measure_addresses ? static_cast<std::size_t>(job.layout.n_a) : 0;
  const std::uint64_t n_addresses =
      job.measure_addresses ? job.layout.slots() : 1;

  for (std::size_t t = 0; t < job.result_taps.size(); ++t) {
    const std::size_t data_bit_position = n_addr_bits + t;
    for (std::uint64_t address = 0; address < n_addresses; ++address) {
      const std::string key = bitstring_from_pattern(address, n_addr_bits);
      try {
        result.taps[t][address] =
            estimate_from_counts(counts, key, data_bit_position);
      } catch (const MissingAddressError&) {
        // address saw no shots; leave it absent
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

PipelineJob build_conv(const std::vector<double>& f,
                       const std::vector<double>& g) {
  if (f.size() != g.size()) {
    throw std::invalid_argument("sequences differ in length: " +
                                std::to_string(f.size()) + " vs " +
                                std::to_string(g.size()));
  }
  if (f.empty()) {
    throw std::invalid_argument("sequences must not be empty");
  }
  check_range(f, "f");
  check_range(g, "g");

  PipelineJob job;
  job.layout = plan_layout(f.size(), 2);
  check_capacity(job.layout.total_qubits());
  job.circuit =
      build_qcrank(job.layout, DataMatrix::from_sequences(job.layout, {f, g}));

  job.result_taps.push_back(append_product(
      job.circuit, job.layout.data_qubit(0), job.layout.data_qubit(1)));
  job.measure_addresses = true;
  job.circuit.set_measured(
      job_measured_qubits(job.layout, true, job.result_taps));
  return job;
}

// ---------------------------------------------------------------------------

PipelineJob build_dtft(const std::vector<double>& h,
                       const std::vector<FrequencyProbe>& probes) {
  if (!is_power_of_two(h.size())) {
    throw std::invalid_argument("signal length must be a power of two, got " +
                                std::to_string(h.size()));
  }
  if (probes.empty()) {
    throw std::invalid_argument("at least one probe frequency is required");
  }
  check_range(h, "signal");

  const int k = static_cast<int>(probes.size());
  PipelineJob job;
  job.layout = plan_layout(h.size(), 2 * k + 1);
  check_capacity(job.layout.total_qubits(),
                 "split the request across circuits with fewer probes");
  job.probes = probes;

  // Channel 0 carries the signal and acts as the shared product memory;
  // channels 2m+1 / 2m+2 carry the cos / sin modulations of probe m.
  std::vector<std::vector<double>> sequences(2 * k + 1);
  sequences[0] = h;
  for (int m = 0; m < k; ++m) {
    std::vector<double> cos_seq(h.size());
    std::vector<double> sin_seq(h.size());
    for (std::size_t t = 0; t < h.size(); ++t) {
      cos_seq[t] = std::cos(probes[m].omega * static_cast<double>(t));
      sin_seq[t] = std::sin(probes[m].omega * static_cast<double>(t));
    }
    sequences[2 * m + 1] = std::move(cos_seq);
    sequences[2 * m + 2] = std::move(sin_seq);
  }
  job.circuit = build_qcrank(job.layout,
                             DataMatrix::from_sequences(job.layout, sequences));

  const int memory = job.layout.data_qubit(0);
  for (int m = 0; m < k; ++m) {
    job.result_taps.push_back(
        append_product(job.circuit, memory, job.layout.data_qubit(2 * m + 1)));
    job.result_taps.push_back(
        append_product(job.circuit, memory, job.layout.data_qubit(2 * m + 2)));
  }

  job.measure_addresses = false;
  job.post_scale = static_cast<double>(h.size());
  job.circuit.set_measured(
      job_measured_qubits(job.layout, false, job.result_taps));
  return job;
}

std::vector<DtftPoint> dtft_points(const PipelineJob& job,
                                   const JobResult& result) {
  if (job.probes.empty() || result.taps.size() != 2 * job.probes.size()) {
    throw std::invalid_argument("job/result pair does not look like a dtft run");
  }
  const double scale = job.post_scale;
  std::vector<DtftPoint> points(job.probes.size());
  for (std::size_t m = 0; m < job.probes.size(); ++m) {
    const auto& cos_tap = result.taps[2 * m];
    const auto& sin_tap = result.taps[2 * m + 1];
    if (!cos_tap.count(0) || !sin_tap.count(0)) {
      throw MissingAddressError("");
    }
    DtftPoint& p = points[m];
    p.omega = job.probes[m].omega;
    p.in_phase = scale * cos_tap.at(0).x_hat;
    p.quadrature = -scale * sin_tap.at(0).x_hat;
    p.in_phase_err = scale * cos_tap.at(0).std_err;
    p.quadrature_err = scale * sin_tap.at(0).std_err;

    p.amplitude = std::hypot(p.in_phase, p.quadrature);
    if (p.amplitude > 0.0) {
      p.amplitude_err = std::sqrt(std::pow(p.in_phase * p.in_phase_err, 2) +
                                  std::pow(p.quadrature * p.quadrature_err, 2)) /
                        p.amplitude;
      p.phase = std::atan2(p.quadrature, p.in_phase);
      p.phase_err = std::sqrt(std::pow(p.quadrature * p.in_phase_err, 2) +
                              std::pow(p.in_phase * p.quadrature_err, 2)) /
                    (p.amplitude * p.amplitude);
    } else {
      p.amplitude_err = std::hypot(p.in_phase_err, p.quadrature_err);
      p.phase = 0.0;
      p.phase_err = std::numbers::pi;
    }
  }
  return points;
}

std::vector<double> chirp_signal(std::size_t n, double f0, double f1) {
  if (n < 2) {
    throw std::invalid_argument("chirp needs at least 2 samples");
  }
  if (!(f0 > 0.0) || !(f1 > f0) || !(f1 < 0.5)) {
    throw std::invalid_argument(
        "chirp frequencies must satisfy 0 < f0 < f1 < 0.5 cycles/sample");
  }
  std::vector<double> h(n);
  double peak = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    const double ft = f0 + (f1 - f0) * static_cast<double>(t) / static_cast<double>(n);
    h[t] = std::pow(ft, 2.0 / 3.0) *
           std::cos(2.0 * std::numbers::pi * ft * static_cast<double>(t));
    peak = std::max(peak, std::abs(h[t]));
  }
  for (double& v : h) v /= peak;
  return h;
}

// ---------------------------------------------------------------------------

PipelineJob build_sqgrad(const std::vector<double>& strip) {
  if (!is_power_of_two(strip.size())) {
    throw std::invalid_argument("strip length must be a power of two, got " +
                                std::to_string(strip.size()));
  }
  check_range(strip, "strip");

  const std::vector<double> backward = shift_backward(strip);
  const std::vector<double> forward = shift_forward(strip);

  PipelineJob job;
  job.layout = plan_layout(strip.size(), 4);
  check_capacity(job.layout.total_qubits());
  job.circuit = build_qcrank(
      job.layout, DataMatrix::from_sequences(
                      job.layout, {backward, forward, backward, forward}));

  const int b0 = job.layout.data_qubit(0);
  const int f0 = job.layout.data_qubit(1);
  const int b1 = job.layout.data_qubit(2);
  const int f1 = job.layout.data_qubit(3);

  append_negation(job.circuit, b0);
  append_negation(job.circuit, b1);
  append_weighted_sum(job.circuit, b0, f0, 0.5);
  append_weighted_sum(job.circuit, b1, f1, 0.5);
  // The product target carries the squared difference; the first gradient
  // copy is the reusable memory side.
  job.result_taps.push_back(append_product(job.circuit, b0, b1));

  job.measure_addresses = true;
  job.circuit.set_measured(
      job_measured_qubits(job.layout, true, job.result_taps));
  return job;
}

// ---------------------------------------------------------------------------

double edge_weight_from_threshold(double threshold) {
  return threshold / (8.0 + threshold);
}

PipelineJob build_edge_tile(const GrayImage& tile_with_halo, double threshold,
                            ThresholdWeightFn weight_fn) {
  if (tile_with_halo.width < 3 || tile_with_halo.height < 3) {
    throw std::invalid_argument("halo'd tile must be at least 3x3");
  }
  const int tw = tile_with_halo.width - 2;
  const int th = tile_with_halo.height - 2;
  const std::size_t pixels = static_cast<std::size_t>(tw) * th;
  if (!is_power_of_two(pixels)) {
    throw std::invalid_argument("tile pixel count must be a power of two, got " +
                                std::to_string(pixels));
  }
  if (!(threshold > 0.0 && threshold < 8.0)) {
    throw std::invalid_argument("edge threshold must lie in (0, 8)");
  }
  const double w = weight_fn(threshold);
  if (!(w > 0.0 && w < 1.0)) {
    throw std::invalid_argument("threshold maps to weight " +
                                std::to_string(w) + " outside (0, 1)");
  }
  check_range(tile_with_halo.pixels, "tile");

  // Four shifted copies per direction, serialized row-major over the tile
  // interior: i = y*tw + x.
  std::vector<std::vector<double>> shifted(8, std::vector<double>(pixels));
  for (int y = 0; y < th; ++y) {
    for (int x = 0; x < tw; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * tw + x;
      const double left = tile_with_halo.at(x, y + 1);
      const double right = tile_with_halo.at(x + 2, y + 1);
      const double up = tile_with_halo.at(x + 1, y);
      const double down = tile_with_halo.at(x + 1, y + 2);
      shifted[0][i] = left;
      shifted[1][i] = right;
      shifted[2][i] = left;
      shifted[3][i] = right;
      shifted[4][i] = up;
      shifted[5][i] = down;
      shifted[6][i] = up;
      shifted[7][i] = down;
    }
  }

  PipelineJob job;
  job.layout = plan_layout(pixels, 8);
  const int n_a = job.layout.n_a;
  const int total = n_a + 10;  // 8 data channels + 2 ancillas
  check_capacity(total, "use smaller tiles");
  job.edge_weight = w;

  Circuit circuit(total);
  {
    // Encoding acts on the first n_a + 8 qubits; rebuild into the wider
    // register so the two ancillas exist from the start.
    const Circuit encode = build_qcrank(
        job.layout, DataMatrix::from_sequences(job.layout, shifted));
    for (const Gate& gate : encode.gates()) circuit.append(gate);
  }

  const int x_mem = job.layout.data_qubit(0);
  const int x_out = job.layout.data_qubit(2);
  const int y_mem = job.layout.data_qubit(4);
  const int y_out = job.layout.data_qubit(6);
  const int anc_mix = n_a + 8;
  const int anc_one = n_a + 9;

  for (int channel : {0, 2, 4, 6}) {
    append_negation(circuit, job.layout.data_qubit(channel));
  }
  append_weighted_sum(circuit, x_mem, job.layout.data_qubit(1), 0.5);
  append_weighted_sum(circuit, x_out, job.layout.data_qubit(3), 0.5);
  append_weighted_sum(circuit, y_mem, job.layout.data_qubit(5), 0.5);
  append_weighted_sum(circuit, y_out, job.layout.data_qubit(7), 0.5);

  append_product(circuit, x_mem, x_out);
  append_product(circuit, y_mem, y_out);

  // The H-prepared ancilla dephases the second branch through the CZ so
  // the following weighted sum combines pure <Z> values.
  circuit.h(anc_mix);
  circuit.cz(anc_mix, y_out);
  append_weighted_sum(circuit, x_out, y_out, 0.5);

  circuit.x(anc_one);  // constant -1
  job.result_taps.push_back(
      append_weighted_sum(circuit, x_out, anc_one, 1.0 - w));

  job.circuit = std::move(circuit);
  job.measure_addresses = true;
  job.circuit.set_measured(
      job_measured_qubits(job.layout, true, job.result_taps));
  return job;
}

// ---------------------------------------------------------------------------

SeriesEstimate decode_series(const PipelineJob& job, const JobResult& result,
                             std::size_t count, std::size_t tap_index) {
  if (tap_index >= result.taps.size()) {
    throw std::invalid_argument("tap index out of range");
  }
  const auto& tap = result.taps[tap_index];
  SeriesEstimate series;
  series.values.reserve(count);
  series.std_errs.reserve(count);
  for (std::uint64_t address = 0; address < count; ++address) {
    auto it = tap.find(address);
    if (it == tap.end()) {
      throw MissingAddressError(
          bitstring_from_pattern(address, job.layout.n_a));
    }
    series.values.push_back(job.post_scale * it->second.x_hat +
                            job.post_offset);
    series.std_errs.push_back(std::abs(job.post_scale) * it->second.std_err);
    if (it->second.degenerate) ++series.degenerate_count;
  }
  return series;
}

std::vector<double> tile_and_stitch(const GrayImage& image,
                                    const TilePlan& plan,
                                    const std::map<int, std::vector<double>>& per_tile) {
  std::vector<int> missing;
  for (const Tile& tile : plan.tiles) {
    auto it = per_tile.find(tile.id);
    if (it == per_tile.end() ||
        it->second.size() !=
            static_cast<std::size_t>(plan.tile_width) * plan.tile_height) {
      missing.push_back(tile.id);
    }
  }
  if (!missing.empty()) {
    throw IncompleteResultError(std::move(missing));
  }

  std::vector<double> out(static_cast<std::size_t>(image.width) * image.height,
                          0.0);
  for (const Tile& tile : plan.tiles) {
    const std::vector<double>& values = per_tile.at(tile.id);
    for (int y = 0; y < plan.tile_height; ++y) {
      for (int x = 0; x < plan.tile_width; ++x) {
        out[static_cast<std::size_t>(tile.origin_y + y) * image.width +
            (tile.origin_x + x)] =
            values[static_cast<std::size_t>(y) * plan.tile_width + x];
      }
    }
  }
  return out;
}

namespace {

std::optional<NoiseConfig> tile_noise(const ImageRunOptions& options,
                                      std::uint64_t tile_seed) {
  if (!options.noise_p2q.has_value()) return std::nullopt;
  return NoiseConfig{*options.noise_p2q, tile_seed};
}

}  // namespace

StitchedResult run_sqgrad_image(const GrayImage& image, int strip_len,
                                const ImageRunOptions& options) {
  if (strip_len < 1 || image.width % strip_len != 0) {
    throw std::invalid_argument("image width must be divisible by strip length");
  }
  const int strips_per_row = image.width / strip_len;
  const std::size_t n_strips =
      static_cast<std::size_t>(strips_per_row) * image.height;

  StitchedResult out;
  out.values.assign(image.pixels.size(), 0.0);
  out.std_errs.assign(image.pixels.size(), 0.0);
  out.circuits = n_strips;

  {
    // All strips share one shape; report the per-circuit cost.
    std::vector<double> probe(static_cast<std::size_t>(strip_len), 0.0);
    const PipelineJob job = build_sqgrad(probe);
    out.two_qubit_gates_per_circuit = job.circuit.two_qubit_gate_count();
    out.gates_per_circuit = job.circuit.gate_count();
  }

  std::vector<std::uint64_t> degenerate(n_strips, 0);
  std::exception_ptr failure;
  std::mutex failure_mutex;

  parallel_for_index(n_strips, options.parallelism, [&](std::size_t s) {
    try {
      const int row = static_cast<int>(s) / strips_per_row;
      const int col0 = (static_cast<int>(s) % strips_per_row) * strip_len;
      std::vector<double> strip(static_cast<std::size_t>(strip_len));
      for (int x = 0; x < strip_len; ++x) {
        strip[x] = image.at(col0 + x, row);
      }
      const PipelineJob job = build_sqgrad(strip);
      const std::uint64_t seed = derive_stream_seed(options.seed, s);
      const JobResult result =
          execute_job(job, options.shots, seed, tile_noise(options, seed));
      const SeriesEstimate series =
          decode_series(job, result, strip.size());
      for (int x = 0; x < strip_len; ++x) {
        const std::size_t p =
            static_cast<std::size_t>(row) * image.width + col0 + x;
        out.values[p] = series.values[x];
        out.std_errs[p] = series.std_errs[x];
      }
      degenerate[s] = series.degenerate_count;
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);

  for (std::uint64_t d : degenerate) out.degenerate_count += d;
  return out;
}

StitchedResult run_edge_image(const GrayImage& image, int tile_width,
                              int tile_height, double threshold,
                              const ImageRunOptions& options,
                              ThresholdWeightFn weight_fn) {
  const TilePlan plan = plan_tiles(image, tile_width, tile_height, 1);

  StitchedResult out;
  out.circuits = plan.tiles.size();
  {
    const PipelineJob job =
        build_edge_tile(plan.tiles.front().patch, threshold, weight_fn);
    out.two_qubit_gates_per_circuit = job.circuit.two_qubit_gate_count();
    out.gates_per_circuit = job.circuit.gate_count();
  }

  std::vector<std::vector<double>> values(plan.tiles.size());
  std::vector<std::vector<double>> errs(plan.tiles.size());
  std::vector<std::uint64_t> degenerate(plan.tiles.size(), 0);
  std::exception_ptr failure;
  std::mutex failure_mutex;

  parallel_for_index(plan.tiles.size(), options.parallelism, [&](std::size_t t) {
    try {
      const Tile& tile = plan.tiles[t];
      PipelineJob job = build_edge_tile(tile.patch, threshold, weight_fn);
      job.tile_id = tile.id;
      const std::uint64_t seed = derive_stream_seed(options.seed, t);
      const JobResult result =
          execute_job(job, options.shots, seed, tile_noise(options, seed));
      const SeriesEstimate series = decode_series(
          job, result, static_cast<std::size_t>(tile_width) * tile_height);
      values[t] = series.values;
      errs[t] = series.std_errs;
      degenerate[t] = series.degenerate_count;
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);

  std::map<int, std::vector<double>> value_map;
  std::map<int, std::vector<double>> err_map;
  for (std::size_t t = 0; t < plan.tiles.size(); ++t) {
    value_map[plan.tiles[t].id] = std::move(values[t]);
    err_map[plan.tiles[t].id] = std::move(errs[t]);
    out.degenerate_count += degenerate[t];
  }
  out.values = tile_and_stitch(image, plan, value_map);
  out.std_errs = tile_and_stitch(image, plan, err_map);
  return out;
}

}  // namespace monarq
