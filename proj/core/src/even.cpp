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

#include "monarq/even.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "monarq/errors.hpp"

namespace monarq {

double value_to_angle(double x) {
  if (!(std::abs(x) <= 1.0)) {  // rejects NaN as well
    throw std::domain_error("value " + std::to_string(x) +
                            " outside the encodable range [-1, 1]");
  }
  return std::acos(x);
}

EvenEstimate estimate_from_counts(const CountsTable& counts,
                                  const std::string& address,
                                  std::size_t data_bit_position) {
  if (data_bit_position >= counts.bit_length) {
    throw std::invalid_argument("data bit position " +
                                std::to_string(data_bit_position) +
                                " outside bitstrings of length " +
                                std::to_string(counts.bit_length));
  }
  if (address.size() > counts.bit_length) {
    throw std::invalid_argument("address longer than measured bitstrings");
  }
  if (data_bit_position < address.size()) {
    throw std::invalid_argument("data bit position overlaps the address bits");
  }

  const std::size_t data_char = counts.bit_length - 1 - data_bit_position;
  const std::size_t addr_offset = counts.bit_length - address.size();

  std::uint64_t matching = 0;
  std::uint64_t ones = 0;
  for (const auto& [key, c] : counts.counts) {
    if (!address.empty() &&
        key.compare(addr_offset, address.size(), address) != 0) {
      continue;
    }
    matching += c;
    if (key[data_char] == '1') ones += c;
  }
  if (matching == 0) {
    throw MissingAddressError(address);
  }

  const double p = static_cast<double>(ones) / static_cast<double>(matching);
  EvenEstimate est;
  est.x_hat = 1.0 - 2.0 * p;
  est.shots_used = matching;
  est.degenerate = (ones == 0 || ones == matching);
  est.std_err =
      est.degenerate ? 0.0 : 2.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(matching));
  return est;
}

}  // namespace monarq
