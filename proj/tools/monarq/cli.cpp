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

#include "monarq/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monarq/analysis.hpp"
#include "monarq/errors.hpp"
#include "monarq/io.hpp"
#include "monarq/manifest.hpp"
#include "monarq/pipelines.hpp"
#include "monarq/qcrank.hpp"
#include "monarq/rng.hpp"

namespace monarq::cli {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct CommonOpts {
  std::uint64_t shots = 0;  // 0 = exact statevector expectations
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  double noise_p2q = 0.0;  // 0 disables noise injection
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--shots", opts.shots,
                  "shots per circuit; 0 runs exact expectations");
  cmd->add_option("--seed", opts.seed, "master seed for sampling and noise");
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_option("--noise-p2q", opts.noise_p2q,
                  "two-qubit depolarizing probability per gate")
      ->check(CLI::Range(0.0, 1.0));
}

std::optional<NoiseConfig> noise_for(const CommonOpts& opts) {
  if (opts.noise_p2q <= 0.0) return std::nullopt;
  return NoiseConfig{opts.noise_p2q, opts.seed};
}

fs::path prepare_out_dir(const CommonOpts& opts) {
  fs::path dir(opts.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw DataFormatError("cannot create output directory '" + dir.string() +
                          "'");
  }
  return dir;
}

RunManifest base_manifest(const std::string& command, const CommonOpts& opts,
                          const QcrankLayout& layout) {
  RunManifest m;
  m.command = command;
  m.seed = opts.seed;
  m.shots = opts.shots;
  if (opts.noise_p2q > 0.0) m.noise_p2q = opts.noise_p2q;
  m.address_qubits = layout.n_a;
  m.data_qubits = layout.n_d;
  m.length = layout.length;
  m.pad_value = layout.pad_value;
  return m;
}

std::vector<double> load_sequence(const std::string& path, bool normalize,
                                  const char* what) {
  std::vector<double> values = read_sequence_csv(path);
  if (normalize) values = minmax_normalize(values);
  for (double v : values) {
    if (!(std::abs(v) <= 1.0)) {
      throw DataFormatError(std::string(what) + " value " + format_double(v) +
                            " outside [-1, 1]; pass --normalize to rescale");
    }
  }
  return values;
}

std::vector<double> parse_frequency_list(const std::string& text) {
  std::vector<double> freqs;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t consumed = 0;
      freqs.push_back(std::stod(item, &consumed));
      if (consumed != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DataFormatError("malformed frequency '" + item + "'");
    }
  }
  if (freqs.empty()) {
    throw DataFormatError("frequency list is empty");
  }
  return freqs;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------

int run_conv(const CommonOpts& opts, const std::string& f_path,
             const std::string& g_path, bool normalize) {
  const fs::path dir = prepare_out_dir(opts);
  const std::vector<double> f = load_sequence(f_path, normalize, "f");
  const std::vector<double> g = load_sequence(g_path, normalize, "g");

  const auto start = Clock::now();
  const PipelineJob job = build_conv(f, g);
  const JobResult result = execute_job(job, opts.shots, opts.seed, noise_for(opts));
  const SeriesEstimate series = decode_series(job, result, f.size());
  const double wall = seconds_since(start);

  const std::vector<double> truth = oracle_pointwise_product(f, g);
  const CalibrationResult calib = calibrate_and_score(series.values, truth);

  CsvTable table;
  table.header = {"index", "f", "g", "estimate", "std_err", "truth", "residual"};
  for (std::size_t i = 0; i < f.size(); ++i) {
    table.rows.push_back({static_cast<double>(i), f[i], g[i], series.values[i],
                          series.std_errs[i], truth[i], calib.residuals[i]});
  }
  write_csv(dir / "conv_result.csv", table);

  RunManifest m = base_manifest("conv", opts, job.layout);
  m.gate_count = job.circuit.gate_count();
  m.two_qubit_gate_count = job.circuit.two_qubit_gate_count();
  m.wall_time_s = wall;
  m.calibration_scale = calib.scale;
  m.rmse_before = calib.rmse_before;
  m.rmse = calib.rmse_after;
  m.degenerate_estimates = series.degenerate_count;
  m.extra["f"] = f_path;
  m.extra["g"] = g_path;
  m.extra["normalize"] = normalize ? "true" : "false";
  m.outputs = {"conv_result.csv", "conv_manifest.json"};
  save_manifest(dir / "conv_manifest.json", m);

  std::printf("conv: L=%zu shots=%llu rmse=%s scale=%s\n", f.size(),
              static_cast<unsigned long long>(opts.shots),
              format_double(m.rmse).c_str(),
              format_double(m.calibration_scale).c_str());
  return 0;
}

// ---------------------------------------------------------------------------

int run_dtft(const CommonOpts& opts, const std::string& signal,
             std::size_t n, double f0, double f1, const std::string& freq_text,
             int probes_per_circuit, bool normalize) {
  const fs::path dir = prepare_out_dir(opts);
  std::vector<double> h;
  if (signal == "chirp") {
    h = chirp_signal(n, f0, f1);
  } else {
    h = load_sequence(signal, normalize, "signal");
  }

  const std::vector<double> freqs = parse_frequency_list(freq_text);
  if (probes_per_circuit < 1) {
    throw std::invalid_argument("probes per circuit must be at least 1");
  }

  const auto start = Clock::now();
  std::vector<DtftPoint> points;
  std::size_t circuits = 0;
  std::uint64_t gate_count = 0;
  std::uint64_t two_qubit = 0;
  QcrankLayout layout{};
  for (std::size_t begin = 0; begin < freqs.size();
       begin += probes_per_circuit) {
    const std::size_t end =
        std::min(freqs.size(), begin + probes_per_circuit);
    std::vector<FrequencyProbe> probes;
    for (std::size_t i = begin; i < end; ++i) probes.push_back({freqs[i]});

    const PipelineJob job = build_dtft(h, probes);
    const std::uint64_t seed = derive_stream_seed(opts.seed, circuits);
    std::optional<NoiseConfig> noise = noise_for(opts);
    if (noise) noise->seed = seed;
    const JobResult result = execute_job(job, opts.shots, seed, noise);
    const std::vector<DtftPoint> part = dtft_points(job, result);
    points.insert(points.end(), part.begin(), part.end());

    layout = job.layout;
    gate_count = job.circuit.gate_count();
    two_qubit = job.circuit.two_qubit_gate_count();
    ++circuits;
  }
  const double wall = seconds_since(start);

  CsvTable table;
  table.header = {"omega",         "in_phase",      "quadrature",
                  "in_phase_err",  "quadrature_err", "amplitude",
                  "amplitude_err", "phase",          "phase_err",
                  "oracle_in_phase", "oracle_quadrature"};
  std::vector<double> measured_iq;
  std::vector<double> truth_iq;
  for (const DtftPoint& p : points) {
    const auto [oi, oq] = oracle_dtft(h, p.omega);
    table.rows.push_back({p.omega, p.in_phase, p.quadrature, p.in_phase_err,
                          p.quadrature_err, p.amplitude, p.amplitude_err,
                          p.phase, p.phase_err, oi, oq});
    measured_iq.push_back(p.in_phase);
    measured_iq.push_back(p.quadrature);
    truth_iq.push_back(oi);
    truth_iq.push_back(oq);
  }
  write_csv(dir / "dtft_result.csv", table);

  RunManifest m = base_manifest("dtft", opts, layout);
  m.circuits = circuits;
  m.gate_count = gate_count;
  m.two_qubit_gate_count = two_qubit;
  m.wall_time_s = wall;
  m.rmse = rmse(measured_iq, truth_iq);
  m.rmse_before = m.rmse;
  m.extra["signal"] = signal;
  m.extra["freqs"] = freq_text;
  m.extra["probes_per_circuit"] = std::to_string(probes_per_circuit);
  if (signal == "chirp") {
    m.extra["chirp_n"] = std::to_string(n);
    m.extra["chirp_f0"] = format_double(f0);
    m.extra["chirp_f1"] = format_double(f1);
  }
  m.outputs = {"dtft_result.csv", "dtft_manifest.json"};
  save_manifest(dir / "dtft_manifest.json", m);

  std::printf("dtft: %zu probes over %zu circuits, rmse(I,Q)=%s\n",
              points.size(), circuits, format_double(m.rmse).c_str());
  return 0;
}

// ---------------------------------------------------------------------------

int run_grad(const CommonOpts& opts, const std::string& image_path,
             int strip_len, double mask_threshold) {
  const fs::path dir = prepare_out_dir(opts);
  const GrayImage image = read_pgm(image_path);

  ImageRunOptions run;
  run.shots = opts.shots;
  run.seed = opts.seed;
  if (opts.noise_p2q > 0.0) run.noise_p2q = opts.noise_p2q;

  const auto start = Clock::now();
  const StitchedResult res = run_sqgrad_image(image, strip_len, run);
  const double wall = seconds_since(start);

  const std::vector<double> truth = oracle_sqgrad_image(image, strip_len);
  const CalibrationResult calib = calibrate_and_score(res.values, truth);

  // Gradient map: D^2 in [0, 1] rendered at 8 bits.
  std::vector<std::uint16_t> levels(res.values.size());
  for (std::size_t i = 0; i < res.values.size(); ++i) {
    const double v = std::clamp(res.values[i], 0.0, 1.0);
    levels[i] = static_cast<std::uint16_t>(std::lround(v * 255.0));
  }
  write_pgm_levels(dir / "grad_result.pgm", levels, image.width, image.height,
                   255);

  CsvTable table;
  table.header = {"x", "y", "truth", "estimate", "std_err", "residual"};
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * image.width + x;
      table.rows.push_back({static_cast<double>(x), static_cast<double>(y),
                            truth[i], res.values[i], res.std_errs[i],
                            calib.residuals[i]});
    }
  }
  write_csv(dir / "grad_residual.csv", table);

  std::vector<bool> mask(truth.size());
  bool any = false;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    mask[i] = truth[i] > mask_threshold;
    any = any || mask[i];
  }

  QcrankLayout layout = plan_layout(static_cast<std::size_t>(strip_len), 4);
  RunManifest m = base_manifest("grad", opts, layout);
  m.circuits = res.circuits;
  m.gate_count = res.gates_per_circuit;
  m.two_qubit_gate_count = res.two_qubit_gates_per_circuit;
  m.wall_time_s = wall;
  m.calibration_scale = calib.scale;
  m.rmse_before = calib.rmse_before;
  m.rmse = calib.rmse_after;
  m.degenerate_estimates = res.degenerate_count;
  m.extra["image"] = image_path;
  m.extra["strip_len"] = std::to_string(strip_len);
  m.extra["mask_threshold"] = format_double(mask_threshold);
  if (any) {
    std::vector<double> scaled(res.values.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      scaled[i] = calib.scale * res.values[i];
    }
    m.extra["rmse_masked"] = format_double(rmse_masked(scaled, truth, mask));
  }
  m.outputs = {"grad_result.pgm", "grad_residual.csv", "grad_manifest.json"};
  save_manifest(dir / "grad_manifest.json", m);

  std::printf("grad: %dx%d image, %zu strips, rmse=%s scale=%s\n", image.width,
              image.height, res.circuits, format_double(m.rmse).c_str(),
              format_double(m.calibration_scale).c_str());
  return 0;
}

// ---------------------------------------------------------------------------

int run_edge(const CommonOpts& opts, const std::string& image_path,
             double threshold, int tile_w, int tile_h) {
  const fs::path dir = prepare_out_dir(opts);
  const GrayImage image = read_pgm(image_path);

  ImageRunOptions run;
  run.shots = opts.shots;
  run.seed = opts.seed;
  if (opts.noise_p2q > 0.0) run.noise_p2q = opts.noise_p2q;

  const auto start = Clock::now();
  const StitchedResult res = run_edge_image(image, tile_w, tile_h, threshold, run);
  const double wall = seconds_since(start);

  const EdgeOracle oracle = oracle_edge(image, threshold);
  const CalibrationResult calib = calibrate_and_score(res.values, oracle.ev);

  std::vector<std::uint16_t> mask_levels(res.values.size());
  for (std::size_t i = 0; i < res.values.size(); ++i) {
    mask_levels[i] = res.values[i] > 0.0 ? 255 : 0;
  }
  write_pgm_levels(dir / "edge_mask.pgm", mask_levels, image.width,
                   image.height, 255);

  CsvTable table;
  table.header = {"x", "y", "ev", "std_err", "oracle_ev", "edge"};
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * image.width + x;
      table.rows.push_back({static_cast<double>(x), static_cast<double>(y),
                            res.values[i], res.std_errs[i], oracle.ev[i],
                            res.values[i] > 0.0 ? 1.0 : 0.0});
    }
  }
  write_csv(dir / "edge_ev.csv", table);

  QcrankLayout layout =
      plan_layout(static_cast<std::size_t>(tile_w) * tile_h, 8);
  RunManifest m = base_manifest("edge", opts, layout);
  m.circuits = res.circuits;
  m.gate_count = res.gates_per_circuit;
  m.two_qubit_gate_count = res.two_qubit_gates_per_circuit;
  m.wall_time_s = wall;
  m.calibration_scale = calib.scale;
  m.rmse_before = calib.rmse_before;
  m.rmse = calib.rmse_after;
  m.degenerate_estimates = res.degenerate_count;
  m.extra["image"] = image_path;
  m.extra["threshold"] = format_double(threshold);
  m.extra["weight"] = format_double(oracle.weight);
  m.extra["tile_width"] = std::to_string(tile_w);
  m.extra["tile_height"] = std::to_string(tile_h);
  m.outputs = {"edge_mask.pgm", "edge_ev.csv", "edge_manifest.json"};
  save_manifest(dir / "edge_manifest.json", m);

  std::size_t flagged = 0;
  for (std::uint16_t v : mask_levels) flagged += v > 0 ? 1 : 0;
  std::printf("edge: %dx%d image, %zu tiles, %zu edge pixels, rmse=%s\n",
              image.width, image.height, res.circuits, flagged,
              format_double(m.rmse).c_str());
  return 0;
}

// ---------------------------------------------------------------------------

int run_roundtrip(const CommonOpts& opts, std::size_t length, int channels,
                  double pad_value) {
  const fs::path dir = prepare_out_dir(opts);

  std::mt19937_64 rng(opts.seed);
  std::vector<std::vector<double>> data(channels,
                                        std::vector<double>(length));
  for (auto& row : data) {
    for (double& v : row) v = 2.0 * uniform_double(rng) - 1.0;
  }

  const auto start = Clock::now();
  const QcrankLayout layout = plan_layout(length, channels, pad_value);
  if (layout.total_qubits() > max_qubits()) {
    throw CapacityError(layout.total_qubits(), max_qubits());
  }
  Circuit circuit =
      build_qcrank(layout, DataMatrix::from_sequences(layout, data));
  measure_all_qcrank(circuit, layout);

  CsvTable table;
  table.header = {"address", "channel", "input", "estimate", "std_err", "error"};
  std::vector<double> inputs;
  std::vector<double> estimates;
  std::uint64_t degenerate = 0;

  if (opts.shots == 0) {
    const auto decoded = decode_qcrank_exact(run_statevector(circuit), layout);
    for (int j = 0; j < channels; ++j) {
      for (std::size_t i = 0; i < length; ++i) {
        const double err = decoded[j][i] - data[j][i];
        table.rows.push_back({static_cast<double>(i), static_cast<double>(j),
                              data[j][i], decoded[j][i], 0.0, err});
        inputs.push_back(data[j][i]);
        estimates.push_back(decoded[j][i]);
      }
    }
  } else {
    CountsTable counts;
    if (opts.noise_p2q > 0.0) {
      counts = run_noisy_trajectories(circuit, {opts.noise_p2q, opts.seed},
                                      opts.shots);
    } else {
      counts = sample_counts(run_statevector(circuit),
                             circuit.measured_qubits(), opts.shots, opts.seed);
    }
    const QcrankDecode decoded = decode_qcrank(counts, layout);
    for (int j = 0; j < channels; ++j) {
      for (std::size_t i = 0; i < length; ++i) {
        if (!decoded[j][i].has_value()) {
          throw MissingAddressError(bitstring_from_pattern(i, layout.n_a));
        }
        const EvenEstimate& est = *decoded[j][i];
        const double err = est.x_hat - data[j][i];
        table.rows.push_back({static_cast<double>(i), static_cast<double>(j),
                              data[j][i], est.x_hat, est.std_err, err});
        inputs.push_back(data[j][i]);
        estimates.push_back(est.x_hat);
        if (est.degenerate) ++degenerate;
      }
    }
  }
  const double wall = seconds_since(start);
  write_csv(dir / "roundtrip_result.csv", table);

  RunManifest m = base_manifest("roundtrip", opts, layout);
  m.gate_count = circuit.gate_count();
  m.two_qubit_gate_count = circuit.two_qubit_gate_count();
  m.wall_time_s = wall;
  m.rmse = rmse(estimates, inputs);
  m.rmse_before = m.rmse;
  m.degenerate_estimates = degenerate;
  m.outputs = {"roundtrip_result.csv", "roundtrip_manifest.json"};
  save_manifest(dir / "roundtrip_manifest.json", m);

  std::printf("roundtrip: L=%zu channels=%d rmse=%s\n", length, channels,
              format_double(m.rmse).c_str());
  return 0;
}

// ---------------------------------------------------------------------------

int run_noise_fit(const CommonOpts& opts, std::size_t length,
                  const std::string& shots_text, int repeats) {
  const fs::path dir = prepare_out_dir(opts);
  if (repeats < 1) {
    throw std::invalid_argument("repeats must be at least 1");
  }

  std::vector<std::uint64_t> shot_counts;
  {
    std::stringstream stream(shots_text);
    std::string item;
    while (std::getline(stream, item, ',')) {
      if (item.empty()) continue;
      try {
        shot_counts.push_back(std::stoull(item));
      } catch (const std::exception&) {
        throw DataFormatError("malformed shot count '" + item + "'");
      }
    }
  }
  if (shot_counts.size() < 3) {
    throw std::invalid_argument("need at least 3 shot counts to fit");
  }

  const auto start = Clock::now();
  std::vector<std::pair<std::uint64_t, double>> samples;
  QcrankLayout layout{};
  std::uint64_t gates = 0;
  std::uint64_t two_qubit = 0;
  std::uint64_t stream = 0;
  for (std::uint64_t shots : shot_counts) {
    for (int r = 0; r < repeats; ++r) {
      const std::uint64_t run_seed = derive_stream_seed(opts.seed, stream++);
      std::mt19937_64 rng(run_seed);
      std::vector<double> f(length);
      std::vector<double> g(length);
      for (double& v : f) v = 2.0 * uniform_double(rng) - 1.0;
      for (double& v : g) v = 2.0 * uniform_double(rng) - 1.0;

      const PipelineJob job = build_conv(f, g);
      std::optional<NoiseConfig> noise;
      if (opts.noise_p2q > 0.0) noise = NoiseConfig{opts.noise_p2q, run_seed};
      const JobResult result = execute_job(job, shots, run_seed, noise);
      const SeriesEstimate series = decode_series(job, result, length);
      samples.emplace_back(shots,
                           rmse(series.values, oracle_pointwise_product(f, g)));
      layout = job.layout;
      gates = job.circuit.gate_count();
      two_qubit = job.circuit.two_qubit_gate_count();
    }
  }
  const NoiseFit fit = fit_noise_model(samples);
  const double wall = seconds_since(start);

  CsvTable table;
  table.header = {"shots", "rmse"};
  for (const auto& [shots, r] : samples) {
    table.rows.push_back({static_cast<double>(shots), r});
  }
  write_csv(dir / "noise_fit_samples.csv", table);

  {
    nlohmann::json j;
    j["shot_coefficient"] = fit.shot_coefficient;
    j["floor_term"] = fit.floor_term;
    j["r_squared"] = fit.r_squared;
    j["residual_rms"] = fit.residual_rms;
    j["floor_negative_flagged"] = fit.floor_negative_flagged;
    nlohmann::json sample_list = nlohmann::json::array();
    for (const auto& [shots, r] : samples) {
      sample_list.push_back({{"shots", shots}, {"rmse", r}});
    }
    j["samples"] = sample_list;
    std::ofstream out(dir / "noise_fit.json", std::ios::trunc);
    if (!out) throw DataFormatError("cannot write noise_fit.json");
    out << j.dump(2) << "\n";
  }

  RunManifest m = base_manifest("noise-fit", opts, layout);
  m.circuits = samples.size();
  m.gate_count = gates;
  m.two_qubit_gate_count = two_qubit;
  m.wall_time_s = wall;
  m.rmse = samples.back().second;
  m.rmse_before = m.rmse;
  m.extra["shots_list"] = shots_text;
  m.extra["repeats"] = std::to_string(repeats);
  m.extra["shot_coefficient"] = format_double(fit.shot_coefficient);
  m.extra["floor_term"] = format_double(fit.floor_term);
  m.extra["r_squared"] = format_double(fit.r_squared);
  m.outputs = {"noise_fit_samples.csv", "noise_fit.json",
               "noise_fit_manifest.json"};
  save_manifest(dir / "noise_fit_manifest.json", m);

  std::printf("noise-fit: A=%s B=%s r2=%s over %zu samples\n",
              format_double(fit.shot_coefficient).c_str(),
              format_double(fit.floor_term).c_str(),
              format_double(fit.r_squared).c_str(), samples.size());
  return 0;
}

}  // namespace

int run_command(int argc, const char* const* argv) {
  CLI::App app{"QCrank data encoding and polynomial arithmetic on a "
               "shot-based statevector simulator"};
  app.require_subcommand(1);

  // conv
  CommonOpts conv_opts;
  std::string conv_f, conv_g;
  bool conv_normalize = false;
  CLI::App* conv = app.add_subcommand(
      "conv", "element-wise product of two sequences");
  add_common(conv, conv_opts);
  conv->add_option("--f", conv_f, "CSV with the first sequence")->required();
  conv->add_option("--g", conv_g, "CSV with the second sequence")->required();
  conv->add_flag("--normalize", conv_normalize,
                 "min-max rescale inputs onto [-1, 1]");

  // dtft
  CommonOpts dtft_opts;
  std::string dtft_signal = "chirp";
  std::size_t dtft_n = 512;
  double dtft_f0 = 0.02;
  double dtft_f1 = 0.2;
  std::string dtft_freqs;
  int dtft_group = 5;
  bool dtft_normalize = false;
  CLI::App* dtft = app.add_subcommand(
      "dtft", "discrete-time Fourier transform at chosen frequencies");
  add_common(dtft, dtft_opts);
  dtft->add_option("--signal", dtft_signal,
                   "'chirp' or a CSV file with the signal");
  dtft->add_option("--n", dtft_n, "chirp sample count");
  dtft->add_option("--f0", dtft_f0, "chirp start frequency (cycles/sample)");
  dtft->add_option("--f1", dtft_f1, "chirp end frequency (cycles/sample)");
  dtft->add_option("--freqs", dtft_freqs,
                   "comma-separated probe frequencies (radians/sample)")
      ->required();
  dtft->add_option("--probes-per-circuit", dtft_group,
                   "probe frequencies evaluated per circuit");
  dtft->add_flag("--normalize", dtft_normalize,
                 "min-max rescale a CSV signal onto [-1, 1]");

  // grad
  CommonOpts grad_opts;
  std::string grad_image;
  int grad_strip = 16;
  double grad_mask = 0.1;
  CLI::App* grad = app.add_subcommand(
      "grad", "horizontal squared gradient of a gray image");
  add_common(grad, grad_opts);
  grad->add_option("--image", grad_image, "input PGM image")->required();
  grad->add_option("--strip-len", grad_strip,
                   "pixels per strip (must divide the image width)");
  grad->add_option("--mask-threshold", grad_mask,
                   "truth threshold for the masked residual summary");

  // edge
  CommonOpts edge_opts;
  std::string edge_image;
  double edge_threshold = 1.0;
  int edge_tw = 32;
  int edge_th = 32;
  CLI::App* edge = app.add_subcommand(
      "edge", "gradient-magnitude edge detection of a gray image");
  add_common(edge, edge_opts);
  edge->add_option("--image", edge_image, "input PGM image")->required();
  edge->add_option("--threshold", edge_threshold,
                   "edge threshold on Gx^2 + Gy^2, in (0, 8)")
      ->required();
  edge->add_option("--tile-w", edge_tw, "tile width in pixels");
  edge->add_option("--tile-h", edge_th, "tile height in pixels");

  // roundtrip
  CommonOpts rt_opts;
  std::size_t rt_length = 32;
  int rt_channels = 1;
  double rt_pad = 0.0;
  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip", "encode random data, decode it back, report the error");
  add_common(roundtrip, rt_opts);
  roundtrip->add_option("--length", rt_length, "sequence length");
  roundtrip->add_option("--channels", rt_channels, "data channels");
  roundtrip->add_option("--pad", rt_pad, "pad value for slots past the length");

  // noise-fit
  CommonOpts nf_opts;
  std::size_t nf_length = 32;
  std::string nf_shots = "1000,4000,16000,64000,256000";
  int nf_repeats = 4;
  CLI::App* noise_fit = app.add_subcommand(
      "noise-fit", "sweep shot counts and fit rmse^2 = A/N + B");
  add_common(noise_fit, nf_opts);
  noise_fit->add_option("--length", nf_length, "sequence length per run");
  noise_fit->add_option("--shots-list", nf_shots,
                        "comma-separated shot counts");
  noise_fit->add_option("--repeats", nf_repeats,
                        "independent runs per shot count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (conv->parsed()) {
      return run_conv(conv_opts, conv_f, conv_g, conv_normalize);
    }
    if (dtft->parsed()) {
      return run_dtft(dtft_opts, dtft_signal, dtft_n, dtft_f0, dtft_f1,
                      dtft_freqs, dtft_group, dtft_normalize);
    }
    if (grad->parsed()) {
      return run_grad(grad_opts, grad_image, grad_strip, grad_mask);
    }
    if (edge->parsed()) {
      return run_edge(edge_opts, edge_image, edge_threshold, edge_tw, edge_th);
    }
    if (roundtrip->parsed()) {
      return run_roundtrip(rt_opts, rt_length, rt_channels, rt_pad);
    }
    if (noise_fit->parsed()) {
      return run_noise_fit(nf_opts, nf_length, nf_shots, nf_repeats);
    }
    std::fprintf(stderr, "error: no subcommand selected\n");
    return 2;
  } catch (const CapacityError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const DataFormatError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const MissingAddressError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const IncompleteResultError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace monarq::cli
