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
#include <optional>
#include <vector>

#include "monarq/circuit.hpp"
#include "monarq/ehands.hpp"
#include "monarq/even.hpp"
#include "monarq/image.hpp"
#include "monarq/qcrank.hpp"
#include "monarq/sampling.hpp"

namespace monarq {

/// One probe frequency for the discrete-time Fourier transform, in
/// radians per sample, evaluated on the grid t = 0 .. L-1.
struct FrequencyProbe {
  double omega = 0.0;
};

/// A built circuit plus its decode plan: which taps carry results, whether
/// addresses are measured (per-slot decode) or not (in-situ averaging),
/// and the classical rescaling applied to decoded expectations.
struct PipelineJob {
  Circuit circuit;
  QcrankLayout layout;
  std::vector<ArithmeticTap> result_taps;
  bool measure_addresses = true;
  double post_scale = 1.0;
  double post_offset = 0.0;
  std::optional<int> tile_id;

  // Builder-specific metadata carried along for decoding and reporting.
  std::vector<FrequencyProbe> probes;  // dtft only
  double edge_weight = 0.0;            // edge only
};

/// Raw decoded expectations, one map per tap. With measured addresses the
/// key is the address index; without, the single entry has key 0 and holds
/// the unconditioned (in-situ averaged) estimate. Addresses that received
/// no shots are simply absent.
struct JobResult {
  std::vector<std::map<std::uint64_t, EvenEstimate>> taps;
  std::uint64_t shots = 0;
};

/// Runs a job. shots == 0 requests exact statevector expectations
/// (std_err 0); otherwise counts are sampled, through the noisy trajectory
/// sampler when `noise` is set (noise requires shots > 0).
JobResult execute_job(const PipelineJob& job, std::uint64_t shots,
                      std::uint64_t seed,
                      const std::optional<NoiseConfig>& noise = std::nullopt);

// ---------------------------------------------------------------------------
// Element-wise product of two sequences.

/// QCrank encodes f and g on two channels of one register; a single
/// product tap yields (f*g)_i at every address.
PipelineJob build_conv(const std::vector<double>& f,
                       const std::vector<double>& g);

// ---------------------------------------------------------------------------
// Discrete-time Fourier transform at user-selected frequencies.

/// Encodes h (length L, a power of two) plus cos/sin modulation sequences
/// for each probe on 2k extra channels; h's qubit is the shared product
/// memory. Addresses stay unmeasured so each tap's expectation is the
/// in-situ average of the per-address products. I(w) = L * <Z>_cos-tap,
/// Q(w) = -L * <Z>_sin-tap.
PipelineJob build_dtft(const std::vector<double>& h,
                       const std::vector<FrequencyProbe>& probes);

/// Amplitude/phase point decoded for one probe, with errors propagated
/// from the tap statistics.
struct DtftPoint {
  double omega = 0.0;
  double in_phase = 0.0;
  double quadrature = 0.0;
  double in_phase_err = 0.0;
  double quadrature_err = 0.0;
  double amplitude = 0.0;
  double amplitude_err = 0.0;
  double phase = 0.0;
  double phase_err = 0.0;
};

std::vector<DtftPoint> dtft_points(const PipelineJob& job,
                                   const JobResult& result);

/// Linear chirp test signal: f(t) = f0 + (f1 - f0) * t/N, zero phase
/// offset, envelope f(t)^(2/3), rescaled to max |h| = 1. Frequencies are
/// in cycles per sample and must satisfy 0 < f0 < f1 < 0.5.
std::vector<double> chirp_signal(std::size_t n, double f0, double f1);

// ---------------------------------------------------------------------------
// Squared gradient of a strip via central differences.

/// Encodes the shifted copies {I_(i-1)} twice and {I_(i+1)} twice (end
/// values replicate the strip's own boundary), negates the backward
/// copies, forms the half-weighted sums, and multiplies the two gradient
/// copies. Decoding yields D_i^2 with D_i = (I_(i+1) - I_(i-1))/2 at every
/// address. Strip length must be a power of two.
PipelineJob build_sqgrad(const std::vector<double>& strip);

// ---------------------------------------------------------------------------
// Edge detection on a tile.

/// Threshold -> weight mapping making EV > 0 exactly equivalent to
/// Gx^2 + Gy^2 > T (differences taken without the 1/2 factor):
/// w = T / (8 + T). A non-equivalent variant w = T / (8 - T) circulates in
/// related literature; it is intentionally not used here.
double edge_weight_from_threshold(double threshold);

using ThresholdWeightFn = double (*)(double);

/// Builds the 8-channel two-direction gradient circuit on a halo'd tile:
/// both squared-gradient branches, a CZ from an H-prepared ancilla that
/// dephases one branch before averaging, the half-weighted branch average,
/// and a final weighted sum against a constant -1 ancilla. The decoded
/// expectation is EV = (1-w) * (Dx^2 + Dy^2)/2 - w; a pixel is an edge iff
/// EV > 0. The tile's interior pixel count must be a power of two.
PipelineJob build_edge_tile(const GrayImage& tile_with_halo, double threshold,
                            ThresholdWeightFn weight_fn = edge_weight_from_threshold);

// ---------------------------------------------------------------------------
// Decoding helpers and tiled execution.

/// Per-address series decoded from a job: entry i covers address i, with
/// post_scale/post_offset applied. Missing addresses raise
/// MissingAddressError.
struct SeriesEstimate {
  std::vector<double> values;
  std::vector<double> std_errs;
  std::uint64_t degenerate_count = 0;
};

/// First `count` addresses of the given tap (length L of the logical
/// sequence, tile pixel count, ...).
SeriesEstimate decode_series(const PipelineJob& job, const JobResult& result,
                             std::size_t count, std::size_t tap_index = 0);

/// Copies each tile's interior values into a full-size image buffer. Results
/// are keyed by tile id; a missing tile raises IncompleteResultError.
std::vector<double> tile_and_stitch(const GrayImage& image,
                                    const TilePlan& plan,
                                    const std::map<int, std::vector<double>>& per_tile);

struct ImageRunOptions {
  std::uint64_t shots = 0;  // 0 = exact statevector expectations
  std::uint64_t seed = 0;
  std::optional<double> noise_p2q;
  int parallelism = 0;  // 0 = hardware concurrency
};

struct StitchedResult {
  std::vector<double> values;
  std::vector<double> std_errs;
  std::uint64_t degenerate_count = 0;
  std::size_t circuits = 0;
  std::size_t two_qubit_gates_per_circuit = 0;
  std::size_t gates_per_circuit = 0;
};

/// Horizontal squared gradient over an image processed as 1 x strip_len
/// strips (image width must be divisible by strip_len). Strip k derives
/// its sampling seed from (seed, k); strips run in parallel.
StitchedResult run_sqgrad_image(const GrayImage& image, int strip_len,
                                const ImageRunOptions& options);

/// Edge-detection EV map over an image processed as halo'd tiles.
StitchedResult run_edge_image(const GrayImage& image, int tile_width,
                              int tile_height, double threshold,
                              const ImageRunOptions& options,
                              ThresholdWeightFn weight_fn = edge_weight_from_threshold);

}  // namespace monarq
