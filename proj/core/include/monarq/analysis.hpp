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
#include <utility>
#include <vector>

#include "monarq/image.hpp"

namespace monarq {

// Classical ground-truth references. These stay independent of the
// circuit path so they can serve as oracles for it.

std::vector<double> oracle_pointwise_product(const std::vector<double>& f,
                                             const std::vector<double>& g);

/// In-phase and quadrature components at angular frequency omega:
/// I = sum h[n] cos(omega n), Q = -sum h[n] sin(omega n).
std::pair<double, double> oracle_dtft(const std::vector<double>& h,
                                      double omega);

/// Central-difference squared gradient of a strip, end values replicated:
/// D_i^2 with D_i = (s[min(i+1, L-1)] - s[max(i-1, 0)]) / 2.
std::vector<double> oracle_sqgrad(const std::vector<double>& strip);

/// Full-image ground truth matching the strip-wise pipeline: each
/// 1 x strip_len strip is differentiated independently with its own end
/// replication.
std::vector<double> oracle_sqgrad_image(const GrayImage& image, int strip_len);

struct EdgeOracle {
  std::vector<double> ev;         // per pixel, row-major
  std::vector<std::uint8_t> mask; // 1 where ev > 0
  double weight = 0.0;
  double t_effective = 0.0;       // threshold on Dx^2 + Dy^2 equivalent to ev > 0
};

/// Per-pixel EV = (1-w) * (Dx^2 + Dy^2)/2 - w with image-border
/// replication, and the edge mask EV > 0. The mask coincides exactly with
/// Gx^2 + Gy^2 > T for raw central differences under the default weight
/// mapping.
EdgeOracle oracle_edge(const GrayImage& image, double threshold);

// ---------------------------------------------------------------------------
// Calibration and error modeling.

double rmse(const std::vector<double>& a, const std::vector<double>& b);

/// RMSE restricted to points where mask[i] is true.
double rmse_masked(const std::vector<double>& a, const std::vector<double>& b,
                   const std::vector<bool>& mask);

/// Single multiplicative attenuation correction: least squares through the
/// origin (no offset term). scale minimizes sum((s*measured - truth)^2).
struct CalibrationResult {
  double scale = 1.0;
  double rmse_before = 0.0;
  double rmse_after = 0.0;
  std::size_t n_points = 0;
  std::vector<double> residuals;  // truth - scale*measured
};

CalibrationResult calibrate_and_score(const std::vector<double>& measured,
                                      const std::vector<double>& truth);

/// Fit of rmse^2 = A / N_shot + B by linear least squares in 1/N_shot.
/// B absorbs shot-independent error; it can come out slightly negative on
/// noisy fits and is flagged when below -1e-6.
struct NoiseFit {
  double shot_coefficient = 0.0;  // A
  double floor_term = 0.0;        // B
  double r_squared = 0.0;
  double residual_rms = 0.0;      // of rmse^2 against the fit
  bool floor_negative_flagged = false;
  std::vector<std::pair<std::uint64_t, double>> samples;  // (shots, rmse)
};

/// Requires at least three distinct shot counts; repeated counts are
/// allowed and simply add fit points.
NoiseFit fit_noise_model(const std::vector<std::pair<std::uint64_t, double>>& samples);

}  // namespace monarq
