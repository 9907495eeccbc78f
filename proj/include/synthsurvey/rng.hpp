// Copyright 2026 The synthsurvey Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Distributions over std::mt19937_64 whose output is fixed by the engine
// alone. The standard library distributions are implementation-defined, so
// results would differ between toolchains.

#ifndef SYNTHSURVEY_RNG_HPP
#define SYNTHSURVEY_RNG_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>

namespace synthsurvey::rng {

/// Uniform integer in [0, n) by rejection; n must be positive.
inline std::size_t uniform_below(std::mt19937_64& engine, std::size_t n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  for (;;) {
    const std::uint64_t x = engine();
    if (x < limit) return static_cast<std::size_t>(x % bound);
  }
}

/// Uniform double in [0, 1) with 53 random bits.
inline double unit_uniform(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller (one draw per call).
inline double standard_normal(std::mt19937_64& engine) {
  double u1 = unit_uniform(engine);
  while (u1 <= 0.0) u1 = unit_uniform(engine);
  const double u2 = unit_uniform(engine);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Index drawn with probability proportional to `weights`.
inline std::size_t weighted_index(std::mt19937_64& engine, std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  double u = unit_uniform(engine) * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (u < weights[i]) return i;
    u -= weights[i];
  }
  // Rounding can leave u just above the last bucket.
  for (std::size_t i = weights.size(); i > 0; --i) {
    if (weights[i - 1] > 0.0) return i - 1;
  }
  return 0;
}

}  // namespace synthsurvey::rng

#endif  // SYNTHSURVEY_RNG_HPP
