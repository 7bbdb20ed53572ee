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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace monarq::cli {

/// Reproducibility record written next to every command's outputs. Every
/// number in an output file is recomputable from these fields plus the
/// input files. Serialized as JSON with stable (sorted) key order.
struct RunManifest {
  std::string command;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  std::optional<double> noise_p2q;

  // Layout summary (per circuit for multi-circuit commands).
  int address_qubits = 0;
  int data_qubits = 0;
  std::uint64_t length = 0;
  double pad_value = 0.0;

  std::uint64_t circuits = 1;
  std::uint64_t gate_count = 0;           // per circuit
  std::uint64_t two_qubit_gate_count = 0; // per circuit

  double wall_time_s = 0.0;
  double calibration_scale = 1.0;
  double rmse_before = 0.0;
  double rmse = 0.0;
  std::uint64_t degenerate_estimates = 0;

  std::map<std::string, std::string> extra;
  std::vector<std::string> outputs;

  bool operator==(const RunManifest&) const = default;
};

std::string manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const std::string& json_text);

void save_manifest(const std::filesystem::path& path,
                   const RunManifest& manifest);
RunManifest load_manifest(const std::filesystem::path& path);

}  // namespace monarq::cli
