// Copyright 2026 The rucbound developers
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

#include <complex>
#include <cstdint>
#include <random>

namespace rucb {

/// Deterministic random source. The engine (mt19937_64) is fully specified
/// by the standard and the variate transforms below are written out
/// explicitly, so a fixed seed reproduces bit-identical streams on any
/// conforming platform. std::*_distribution is avoided on purpose: its
/// output is implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller (one variate per call, no caching).
  double gaussian();

  /// Complex standard normal: (g + i g) / sqrt(2), unit total variance.
  std::complex<double> gaussian_complex();

  /// Child seed for parallel or per-instance sub-streams. Derivation is
  /// splitmix64(seed ^ (GOLDEN * (index + 1))); replaying any instance only
  /// needs the root seed and the instance index.
  static uint64_t child_seed(uint64_t seed, uint64_t index);

 private:
  std::mt19937_64 eng_;
};

}  // namespace rucb
