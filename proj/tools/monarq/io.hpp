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
#include <string>
#include <vector>

#include "monarq/image.hpp"

namespace monarq::cli {

/// Shortest stable decimal rendering used for every CSV number, so that
/// identical runs produce byte-identical files.
std::string format_double(double v);

/// One value per line; a non-numeric first line is treated as a header and
/// skipped. Throws DataFormatError on anything else that fails to parse.
std::vector<double> read_sequence_csv(const std::filesystem::path& path);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void write_csv(const std::filesystem::path& path, const CsvTable& table);

/// Min-max map onto [-1, 1]; a constant sequence maps to all zeros.
std::vector<double> minmax_normalize(const std::vector<double>& values);

/// Netpbm PGM reader: accepts P2 (ASCII) and P5 (binary), maxval up to
/// 65535 (two-byte big-endian samples in P5 when maxval > 255). Gray
/// levels are normalized onto [-1, 1].
GrayImage read_pgm(const std::filesystem::path& path);

/// Writes the image at its source depth. binary=false emits P2.
void write_pgm(const std::filesystem::path& path, const GrayImage& image,
               bool binary = true);

/// Raw-level writer for masks and gradient maps.
void write_pgm_levels(const std::filesystem::path& path,
                      const std::vector<std::uint16_t>& levels, int width,
                      int height, int maxval, bool binary = true);

}  // namespace monarq::cli
