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
#include <random>

namespace monarq {

/// 53-bit uniform double in [0, 1). Bit-reproducible for a fixed seed,
/// unlike std::uniform_real_distribution whose algorithm is
/// implementation-defined.
inline double uniform_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for an independent substream (tile, strip, repeat) derived from a
/// master seed. Distinct indices give uncorrelated mt19937_64 streams.
inline std::uint64_t derive_stream_seed(std::uint64_t master,
                                        std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

/// Uniform integer in [0, n). n must be small; the modulo bias is
/// negligible at 64 bits.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

}  // namespace monarq
