// Copyright 2026 The qfalu developers
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

#include <cstdint>
#include <random>

namespace qfalu {

// Reproducibility contract: all sampling uses std::mt19937_64 (whose output
// sequence is fixed by the C++ standard) and the explicit 53-bit conversion
// below instead of std::uniform_real_distribution (whose output is not
// portable across standard libraries). Per-shot substreams are derived with
// the SplitMix64 finalizer, so a (seed, shot) pair identifies its random
// stream regardless of execution order. Changing any of this changes every
// histogram and is a breaking change.

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class ShotRng {
  public:
    /// Stream for one shot of a sampling run.
    ShotRng(std::uint64_t seed, std::uint64_t shot_index) : gen_(mix64(mix64(seed) ^ shot_index)) {}

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    std::uint64_t next_u64() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

} // namespace qfalu
