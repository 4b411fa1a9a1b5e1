/*
 *  Copyright 2026 The spn authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace spn {

/// Deterministic random source. mt19937_64 output is pinned by the C++
/// standard and the bounded draw below avoids std::uniform_int_distribution
/// (whose mapping is implementation-defined), so identical seeds give
/// identical draws on every platform. That property backs the byte-identical
/// report guarantee.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  /// splitmix64-style combiner for deriving per-cell seeds.
  static uint64_t mix(std::initializer_list<uint64_t> parts) {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (uint64_t v : parts) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
      h ^= h >> 27;
    }
    return h;
  }

  uint64_t next() { return eng_(); }

  /// Uniform draw in [0, n) by rejection; n must be positive.
  uint64_t below(uint64_t n) {
    if (n <= 1) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace spn
