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

#include "monarq/manifest.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "monarq/errors.hpp"

namespace monarq::cli {

using nlohmann::json;

std::string manifest_to_json(const RunManifest& m) {
  json j;
  j["command"] = m.command;
  j["seed"] = m.seed;
  j["shots"] = m.shots;
  if (m.noise_p2q.has_value()) {
    j["noise_p2q"] = *m.noise_p2q;
  } else {
    j["noise_p2q"] = nullptr;
  }
  j["address_qubits"] = m.address_qubits;
  j["data_qubits"] = m.data_qubits;
  j["length"] = m.length;
  j["pad_value"] = m.pad_value;
  j["circuits"] = m.circuits;
  j["gate_count"] = m.gate_count;
  j["two_qubit_gate_count"] = m.two_qubit_gate_count;
  j["wall_time_s"] = m.wall_time_s;
  j["calibration_scale"] = m.calibration_scale;
  j["rmse_before"] = m.rmse_before;
  j["rmse"] = m.rmse;
  j["degenerate_estimates"] = m.degenerate_estimates;
  j["extra"] = m.extra;
  j["outputs"] = m.outputs;
  return j.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw DataFormatError(std::string("malformed manifest: ") + e.what());
  }
  try {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.shots = j.at("shots").get<std::uint64_t>();
    if (!j.at("noise_p2q").is_null()) {
      m.noise_p2q = j.at("noise_p2q").get<double>();
    }
    m.address_qubits = j.at("address_qubits").get<int>();
    m.data_qubits = j.at("data_qubits").get<int>();
    m.length = j.at("length").get<std::uint64_t>();
    m.pad_value = j.at("pad_value").get<double>();
    m.circuits = j.at("circuits").get<std::uint64_t>();
    m.gate_count = j.at("gate_count").get<std::uint64_t>();
    m.two_qubit_gate_count = j.at("two_qubit_gate_count").get<std::uint64_t>();
    m.wall_time_s = j.at("wall_time_s").get<double>();
    m.calibration_scale = j.at("calibration_scale").get<double>();
    m.rmse_before = j.at("rmse_before").get<double>();
    m.rmse = j.at("rmse").get<double>();
    m.degenerate_estimates = j.at("degenerate_estimates").get<std::uint64_t>();
    m.extra = j.at("extra").get<std::map<std::string, std::string>>();
    m.outputs = j.at("outputs").get<std::vector<std::string>>();
    return m;
  } catch (const json::exception& e) {
    throw DataFormatError(std::string("manifest missing fields: ") + e.what());
  }
}

void save_manifest(const std::filesystem::path& path,
                   const RunManifest& manifest) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw DataFormatError("cannot write '" + path.string() + "'");
  }
  out << manifest_to_json(manifest);
}

RunManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataFormatError("cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return manifest_from_json(buffer.str());
}

}  // namespace monarq::cli
