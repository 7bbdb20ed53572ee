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

#include "monarq/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "monarq/pipelines.hpp"

namespace monarq {

std::vector<double> oracle_pointwise_product(const std::vector<double>& f,
                                             const std::vector<double>& g) {
  if (f.size() != g.size()) {
    throw std::invalid_argument("sequences differ in length");
  }
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * g[i];
  return out;
}

std::pair<double, double> oracle_dtft(const std::vector<double>& h,
                                      double omega) {
  double in_phase = 0.0;
  double quadrature = 0.0;
  for (std::size_t n = 0; n < h.size(); ++n) {
    in_phase += h[n] * std::cos(omega * static_cast<double>(n));
    quadrature -= h[n] * std::sin(omega * static_cast<double>(n));
  }
  return {in_phase, quadrature};
}

std::vector<double> oracle_sqgrad(const std::vector<double>& strip) {
  const std::size_t n = strip.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double prev = strip[i == 0 ? 0 : i - 1];
    const double next = strip[i + 1 == n ? i : i + 1];
    const double d = (next - prev) / 2.0;
    out[i] = d * d;
  }
  return out;
}

std::vector<double> oracle_sqgrad_image(const GrayImage& image, int strip_len) {
  if (strip_len < 1 || image.width % strip_len != 0) {
    throw std::invalid_argument("image width must be divisible by strip length");
  }
  std::vector<double> out(image.pixels.size());
  std::vector<double> strip(static_cast<std::size_t>(strip_len));
  for (int y = 0; y < image.height; ++y) {
    for (int x0 = 0; x0 < image.width; x0 += strip_len) {
      for (int x = 0; x < strip_len; ++x) strip[x] = image.at(x0 + x, y);
      const std::vector<double> grad = oracle_sqgrad(strip);
      for (int x = 0; x < strip_len; ++x) {
        out[static_cast<std::size_t>(y) * image.width + x0 + x] = grad[x];
      }
    }
  }
  return out;
}

EdgeOracle oracle_edge(const GrayImage& image, double threshold) {
  EdgeOracle oracle;
  oracle.weight = edge_weight_from_threshold(threshold);
  // EV > 0 iff Dx^2 + Dy^2 > 2w/(1-w); under the default mapping that is
  // threshold/4 in half-difference units.
  oracle.t_effective = 2.0 * oracle.weight / (1.0 - oracle.weight);
  oracle.ev.resize(image.pixels.size());
  oracle.mask.resize(image.pixels.size());
  const double w = oracle.weight;
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      const double dx =
          (image.at_clamped(x + 1, y) - image.at_clamped(x - 1, y)) / 2.0;
      const double dy =
          (image.at_clamped(x, y + 1) - image.at_clamped(x, y - 1)) / 2.0;
      const double g2 = (dx * dx + dy * dy) / 2.0;
      const double ev = (1.0 - w) * g2 - w;
      const std::size_t i = static_cast<std::size_t>(y) * image.width + x;
      oracle.ev[i] = ev;
      oracle.mask[i] = ev > 0.0 ? 1 : 0;
    }
  }
  return oracle;
}

// ---------------------------------------------------------------------------

double rmse(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.empty()) {
    throw std::invalid_argument("rmse needs two equal-length non-empty vectors");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(a.size()));
}

double rmse_masked(const std::vector<double>& a, const std::vector<double>& b,
                   const std::vector<bool>& mask) {
  if (a.size() != b.size() || a.size() != mask.size()) {
    throw std::invalid_argument("rmse_masked needs equal-length vectors");
  }
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!mask[i]) continue;
    const double d = a[i] - b[i];
    sum += d * d;
    ++n;
  }
  if (n == 0) {
    throw std::invalid_argument("mask selects no points");
  }
  return std::sqrt(sum / static_cast<double>(n));
}

CalibrationResult calibrate_and_score(const std::vector<double>& measured,
                                      const std::vector<double>& truth) {
  if (measured.size() != truth.size() || measured.size() < 2) {
    throw std::invalid_argument("calibration needs at least 2 paired points");
  }
  double cross = 0.0;
  double self = 0.0;
  for (std::size_t i = 0; i < measured.size(); ++i) {
    cross += truth[i] * measured[i];
    self += measured[i] * measured[i];
  }
  if (self == 0.0) {
    throw std::invalid_argument(
        "all measured values are zero; attenuation scale is undefined");
  }

  CalibrationResult result;
  result.scale = cross / self;
  result.n_points = measured.size();
  result.rmse_before = rmse(measured, truth);
  result.residuals.resize(measured.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < measured.size(); ++i) {
    result.residuals[i] = truth[i] - result.scale * measured[i];
    sum += result.residuals[i] * result.residuals[i];
  }
  result.rmse_after = std::sqrt(sum / static_cast<double>(measured.size()));
  return result;
}

NoiseFit fit_noise_model(
    const std::vector<std::pair<std::uint64_t, double>>& samples) {
  std::set<std::uint64_t> distinct;
  for (const auto& [shots, r] : samples) {
    if (shots == 0) throw std::invalid_argument("shot count must be positive");
    distinct.insert(shots);
  }
  if (distinct.size() < 3) {
    throw std::invalid_argument(
        "noise-model fit needs at least 3 distinct shot counts");
  }

  // Ordinary least squares of y = rmse^2 against x = 1/N.
  const double n = static_cast<double>(samples.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& [shots, r] : samples) {
    const double x = 1.0 / static_cast<double>(shots);
    const double y = r * r;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = sy / n - slope * sx / n;

  NoiseFit fit;
  fit.shot_coefficient = slope;
  fit.floor_term = intercept;
  fit.floor_negative_flagged = intercept < -1e-6;
  fit.samples = samples;

  double rss = 0.0;
  double tss = 0.0;
  const double mean_y = sy / n;
  for (const auto& [shots, r] : samples) {
    const double x = 1.0 / static_cast<double>(shots);
    const double y = r * r;
    const double e = y - (slope * x + intercept);
    rss += e * e;
    tss += (y - mean_y) * (y - mean_y);
  }
  fit.residual_rms = std::sqrt(rss / n);
  fit.r_squared = tss > 0.0 ? 1.0 - rss / tss : 1.0;
  return fit;
}

}  // namespace monarq
