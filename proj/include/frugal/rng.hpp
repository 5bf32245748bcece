// Copyright 2026 The FrugalSim Authors.
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

namespace frugal {

// Seeded SplitMix64 stream with cheap substream derivation.
//
// Seeding: the user seed is scrambled once, then every call to next_u64()
// advances the state by the 64-bit golden-ratio increment and returns the
// finalized value (Steele et al.'s SplitMix64). substream(k) hashes the
// *current* state together with k without advancing the parent, so each
// consumer of an instance (arrival process, cost draws, permutation, ...)
// owns an independent stream and adding draws to one never perturbs the
// others under a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix(seed + kGamma)) {}

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [lo, hi], inclusive, bias-free by rejection.
  int uniform_int(int lo, int hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return lo + static_cast<int>(draw % range);
  }

  // Knuth's product method; O(lambda) draws per sample.
  int poisson(double lambda) {
    double limit = std::exp(-lambda);
    double product = 1.0;
    int count = 0;
    do {
      ++count;
      product *= uniform01();
    } while (product > limit);
    return count - 1;
  }

  Rng substream(std::uint64_t stream) const {
    Rng child(0);
    child.state_ = mix(state_ ^ mix(stream + kGamma));
    return child;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace frugal
