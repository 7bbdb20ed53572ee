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
#include <vector>

namespace monarq {

/// Grayscale image with pixels normalized to [-1, 1], stored row-major
/// (pixel (x, y) at index y*width + x). source_depth remembers the
/// original bit depth for round-tripping to integer gray levels.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> pixels;
  int source_depth = 8;

  double at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  double& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }

  /// Clamped lookup: coordinates outside the image replicate the nearest
  /// in-image pixel.
  double at_clamped(int x, int y) const;

  static GrayImage filled(int width, int height, double value, int depth = 8);
};

/// Maps integer gray levels [0, maxval] linearly onto [-1, 1].
GrayImage normalize_gray(const std::vector<std::uint16_t>& levels, int width,
                         int height, int maxval);

/// Inverse of normalize_gray at the image's source depth; values are
/// clamped into [0, maxval] after rounding.
std::vector<std::uint16_t> denormalize_gray(const GrayImage& image);

/// One tile of a tiling: `patch` is the (tile_w + 2*halo) x (tile_h +
/// 2*halo) cut-out whose halo ring replicates the nearest in-image pixels,
/// i.e. true neighbors for interior boundaries and edge replication at the
/// image border.
struct Tile {
  int id = 0;
  int origin_x = 0;
  int origin_y = 0;
  GrayImage patch;
};

struct TilePlan {
  int tile_width = 0;
  int tile_height = 0;
  int halo = 1;
  std::vector<Tile> tiles;  // row-major by origin
};

/// Exact cover of the image: interiors are disjoint and their union is the
/// whole image, so the dimensions must be divisible by the tile size.
TilePlan plan_tiles(const GrayImage& image, int tile_width, int tile_height,
                    int halo = 1);

}  // namespace monarq
