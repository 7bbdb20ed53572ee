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

#include <stdexcept>
#include <string>
#include <vector>

namespace monarq {

/// Requested register width exceeds the dense-simulation limit.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(int requested, int limit, const std::string& hint = "")
      : std::runtime_error("register of " + std::to_string(requested) +
                           " qubits exceeds the capacity limit of " +
                           std::to_string(limit) +
                           " (set MONARQ_MAX_QUBITS to raise it)" +
                           (hint.empty() ? "" : "; " + hint)),
        requested_(requested),
        limit_(limit) {}

  int requested() const { return requested_; }
  int limit() const { return limit_; }

 private:
  int requested_;
  int limit_;
};

/// Malformed or out-of-range input data (files, sequences, images).
class DataFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No measured shot matched the requested address pattern.
class MissingAddressError : public std::runtime_error {
 public:
  explicit MissingAddressError(std::string address)
      : std::runtime_error("no measured shots for address '" + address + "'"),
        address_(std::move(address)) {}

  const std::string& address() const { return address_; }

 private:
  std::string address_;
};

/// A stitched result is missing one or more tiles.
class IncompleteResultError : public std::runtime_error {
 public:
  explicit IncompleteResultError(std::vector<int> missing)
      : std::runtime_error(describe(missing)), missing_(std::move(missing)) {}

  const std::vector<int>& missing_tiles() const { return missing_; }

 private:
  static std::string describe(const std::vector<int>& missing) {
    std::string msg = "missing results for tiles:";
    for (int id : missing) msg += " " + std::to_string(id);
    return msg;
  }

  std::vector<int> missing_;
};

}  // namespace monarq
