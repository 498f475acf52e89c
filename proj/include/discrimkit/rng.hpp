// Copyright 2026 The discrimkit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace discrimkit {

// SplitMix64 (Steele, Lea & Flood, 2014). A 64-bit counter-based generator:
// every output is a finalizer of an affine counter, so disjoint substreams
// can be derived from (seed, index) pairs and consumed in any order.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform double in [0, 1), 53 significant bits.
  double next_double() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Independent generator for item `index` of a run seeded with `seed`.
// Results depend only on (seed, index), never on evaluation order, so
// substreams may be consumed from any thread.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(SplitMix64::mix(seed ^ SplitMix64::mix(
                                               index + 0x9e3779b97f4a7c15ULL)));
}

// Standard normal deviate via Box-Muller.
inline double standard_normal(SplitMix64& g) {
  // Shift into (0, 1] so the log argument never vanishes.
  const double u1 =
      (static_cast<double>(g.next() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = g.next_double();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace discrimkit
