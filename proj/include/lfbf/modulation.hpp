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
#include <span>
#include <string>
#include <vector>

#include "lfbf/numerics.hpp"
#include "lfbf/random.hpp"

namespace lfbf {

enum class Modulation { kBpsk, kQpsk };

std::string to_string(Modulation m);
Modulation modulation_from_string(const std::string& name);

inline unsigned bits_per_symbol(Modulation m) { return m == Modulation::kBpsk ? 1 : 2; }

using Bit = std::uint8_t;

/// BPSK: 0 -> +1, 1 -> -1. QPSK (Gray): (b0, b1) -> ((1-2b0) + j(1-2b1))/sqrt(2).
/// Both constellations have unit average energy. Throws OddBitCount for QPSK
/// with an odd number of bits.
std::vector<Complex> modulate(std::span<const Bit> bits, Modulation scheme);

/// Sign decisions matching `modulate`; zero maps to bit 0.
std::vector<Bit> demodulate(std::span<const Complex> symbols, Modulation scheme);

/// Adds i.i.d. CN(0, noise_var) samples.
std::vector<Complex> awgn(std::span<const Complex> symbols, double noise_var, RandomStream& rng);

}  // namespace lfbf
