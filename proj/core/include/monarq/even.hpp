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

#include <cstddef>
#include <cstdint>
#include <string>

#include "monarq/sampling.hpp"

namespace monarq {

/// Expectation-value encoding: x in [-1, 1] is stored as RY(arccos x)|0>
/// so that <Z> = x. Inputs outside [-1, 1] are rejected, not clamped;
/// normalization that may clamp belongs upstream.
double value_to_angle(double x);

/// Estimate of an EVEN-encoded value recovered from counts.
/// std_err is the plug-in binomial error 2*sqrt(p(1-p)/shots_used) with
/// p = (1 - x_hat)/2; when p is exactly 0 or 1, std_err is 0 and the
/// estimate is flagged degenerate.
struct EvenEstimate {
  double x_hat = 0.0;
  double std_err = 0.0;
  std::uint64_t shots_used = 0;
  bool degenerate = false;
};

/// x_hat = 1 - 2 * P(data bit = 1 | address). `address` selects shots whose
/// rightmost |address| characters match; the empty string matches every
/// shot. `data_bit_position` indexes the measured-qubit list (0 = rightmost
/// character). Throws MissingAddressError when no shot matches.
EvenEstimate estimate_from_counts(const CountsTable& counts,
                                  const std::string& address,
                                  std::size_t data_bit_position);

}  // namespace monarq
