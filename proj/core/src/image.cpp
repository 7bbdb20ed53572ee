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

#include "monarq/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "monarq/errors.hpp"

namespace monarq {

double GrayImage::at_clamped(int x, int y) const {
  x = std::clamp(x, 0, width - 1);
  y = std::clamp(y, 0, height - 1);
  return at(x, y);
}

GrayImage GrayImage::filled(int width, int height, double value, int depth) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("image dimensions must be positive");
  }
  GrayImage img;
  img.width = width;
  img.height = height;
  img.source_depth = depth;
  img.pixels.assign(static_cast<std::size_t>(width) * height, value);
  return img;
}

GrayImage normalize_gray(const std::vector<std::uint16_t>& levels, int width,
                         int height, int maxval) {
  if (width < 1 || height < 1 ||
      levels.size() != static_cast<std::size_t>(width) * height) {
    throw DataFormatError("pixel buffer does not match image dimensions");
  }
  if (maxval < 1 || maxval > 65535) {
    throw DataFormatError("gray maxval must be in [1, 65535]");
  }
  GrayImage img;
  img.width = width;
  img.height = height;
  img.source_depth = 1;
  while ((1 << img.source_depth) - 1 < maxval) ++img.source_depth;
  img.pixels.resize(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] > maxval) {
      throw DataFormatError("gray level " + std::to_string(levels[i]) +
                            " exceeds maxval " + std::to_string(maxval));
    }
    img.pixels[i] = 2.0 * levels[i] / maxval - 1.0;
  }
  return img;
}

std::vector<std::uint16_t> denormalize_gray(const GrayImage& image) {
  const int maxval = (1 << image.source_depth) - 1;
  std::vector<std::uint16_t> levels(image.pixels.size());
  for (std::size_t i = 0; i < image.pixels.size(); ++i) {
    const double v = std::round((image.pixels[i] + 1.0) / 2.0 * maxval);
    levels[i] = static_cast<std::uint16_t>(
        std::clamp(v, 0.0, static_cast<double>(maxval)));
  }
  return levels;
}

TilePlan plan_tiles(const GrayImage& image, int tile_width, int tile_height,
                    int halo) {
  if (tile_width < 1 || tile_height < 1) {
    throw std::invalid_argument("tile dimensions must be positive");
  }
  if (halo < 0) {
    throw std::invalid_argument("halo must be non-negative");
  }
  if (image.width % tile_width != 0 || image.height % tile_height != 0) {
    throw std::invalid_argument(
        "image " + std::to_string(image.width) + "x" +
        std::to_string(image.height) + " is not divisible into " +
        std::to_string(tile_width) + "x" + std::to_string(tile_height) +
        " tiles");
  }

  TilePlan plan;
  plan.tile_width = tile_width;
  plan.tile_height = tile_height;
  plan.halo = halo;

  int id = 0;
  for (int y0 = 0; y0 < image.height; y0 += tile_height) {
    for (int x0 = 0; x0 < image.width; x0 += tile_width) {
      Tile tile;
      tile.id = id++;
      tile.origin_x = x0;
      tile.origin_y = y0;
      tile.patch = GrayImage::filled(tile_width + 2 * halo,
                                     tile_height + 2 * halo, 0.0,
                                     image.source_depth);
      for (int py = 0; py < tile.patch.height; ++py) {
        for (int px = 0; px < tile.patch.width; ++px) {
          tile.patch.at(px, py) =
              image.at_clamped(x0 - halo + px, y0 - halo + py);
        }
      }
      plan.tiles.push_back(std::move(tile));
    }
  }
  return plan;
}

}  // namespace monarq
