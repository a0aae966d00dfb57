// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The lfbf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

#include "lfbf/numerics.hpp"

namespace lfbf {

/// SplitMix64 finalizer; used to turn structured seeds into well-mixed ones.
std::uint64_t mix64(std::uint64_t x);

/// Deterministic pseudo-random stream.
///
/// Built on std::mt19937_64 with our own uniform and Gaussian transforms so
/// that output is bit-identical across standard library implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

  /// Independent sub-stream for (master, index, purpose). Output depends only
  /// on the three arguments.
  static RandomStream derive(std::uint64_t master, std::uint64_t index, std::uint64_t purpose);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }
  std::uint32_t next_u32() { return static_cast<std::uint32_t>(engine_() >> 32); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Circularly-symmetric complex Gaussian CN(0, variance) via Box-Muller.
  Complex complex_normal(double variance = 1.0);

  /// Equiprobable bit.
  int bit() { return static_cast<int>(engine_() >> 63); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Tags separating the sub-streams used inside one Monte Carlo trial.
enum class StreamPurpose : std::uint64_t {
  kChannel = 1,
  kCodebook = 2,
  kBits = 3,
  kNoise = 4,
  kPilotNoise = 5,
};

inline RandomStream derive_stream(std::uint64_t master, std::uint64_t index, StreamPurpose p) {
  return RandomStream::derive(master, index, static_cast<std::uint64_t>(p));
}

}  // namespace lfbf
