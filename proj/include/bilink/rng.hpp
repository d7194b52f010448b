/*
 * Copyright 2026 The bilink authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// Deterministic randomness.  The standard <random> distributions are
// implementation-defined, so sequences would differ across standard
// libraries; everything here is fixed bit-for-bit by the seed alone.

#include <cstdint>
#include <string_view>

namespace bilink {

inline constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

/// One stateless splitmix64 round.
constexpr uint64_t mix64(uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Documented seed-derivation chain: every sub-seed used anywhere in the
/// toolkit is derive_seed(parent, salt), so independent tasks (repetitions,
/// methods, tie-breaking) can run in any order and still reproduce.
constexpr uint64_t derive_seed(uint64_t parent, uint64_t salt) {
  return mix64(parent ^ (kGolden * (salt + 1)));
}

/// FNV-1a, used for stable string salts and graph checksums.
constexpr uint64_t fnv1a64(std::string_view s, uint64_t h = 0xCBF29CE484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

constexpr uint64_t fnv1a64(uint64_t v, uint64_t h = 0xCBF29CE484222325ull) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xFF;
    h *= 0x100000001B3ull;
  }
  return h;
}

/// Maps 64 random bits to a double in [0, 1).
constexpr double unit_double(uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// splitmix64 sequence generator with unbiased bounded sampling.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += kGolden;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound); Lemire rejection method.
  uint64_t next_below(uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto lo = static_cast<uint64_t>(m);
    if (lo < bound) {
      const uint64_t threshold = -bound % bound;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  double next_unit() { return unit_double(next()); }

 private:
  uint64_t state_;
};

}  // namespace bilink
