/*
   Copyright 2026 The hankellab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HANKELLAB_CORE_RNG_HPP
#define HANKELLAB_CORE_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

#include "core/types.hpp"

namespace hankellab {

/// Small deterministic generator (splitmix64). Used for every seeded draw in
/// the library so that results are bit-reproducible across platforms; the
/// standard-library distributions are implementation-defined and are avoided.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double next_normal() {
    double u = 1.0 - next_double();  // (0, 1]
    double v = next_double();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
  }

  /// Complex standard normal (unit variance overall).
  Complex next_complex_normal() {
    double a = next_normal();
    double b = next_normal();
    return Complex(a, b) / std::sqrt(2.0);
  }

 private:
  std::uint64_t state_;
};

/// Mixes experiment coordinates into a child seed, so that draws are
/// independent per (experiment, size, index) and order-insensitive.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  Rng r(seed ^ (a * 0xd1342543de82ef95ULL) ^ (b * 0xaf251af3b0f025b5ULL));
  return r.next_u64();
}

}  // namespace hankellab

#endif
