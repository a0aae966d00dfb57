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

#include "lfbf/modulation.hpp"

#include <numbers>

namespace lfbf {

std::string to_string(Modulation m) { return m == Modulation::kBpsk ? "bpsk" : "qpsk"; }

Modulation modulation_from_string(const std::string& name) {
  if (name == "bpsk" || name == "BPSK") return Modulation::kBpsk;
  if (name == "qpsk" || name == "QPSK") return Modulation::kQpsk;
  throw ConfigError("unknown modulation '" + name + "' (expected bpsk or qpsk)");
}

std::vector<Complex> modulate(std::span<const Bit> bits, Modulation scheme) {
  std::vector<Complex> out;
  if (scheme == Modulation::kBpsk) {
    out.reserve(bits.size());
    for (Bit b : bits) out.emplace_back(b ? -1.0 : 1.0, 0.0);
    return out;
  }
  if (bits.size() % 2 != 0) throw OddBitCount("QPSK needs an even number of bits");
  constexpr double a = std::numbers::sqrt2 / 2.0;
  out.reserve(bits.size() / 2);
  for (std::size_t i = 0; i < bits.size(); i += 2)
    out.emplace_back(bits[i] ? -a : a, bits[i + 1] ? -a : a);
  return out;
}

std::vector<Bit> demodulate(std::span<const Complex> symbols, Modulation scheme) {
  std::vector<Bit> out;
  out.reserve(symbols.size() * bits_per_symbol(scheme));
  for (const auto& z : symbols) {
    out.push_back(z.real() < 0.0 ? 1 : 0);
    if (scheme == Modulation::kQpsk) out.push_back(z.imag() < 0.0 ? 1 : 0);
  }
  return out;
}

std::vector<Complex> awgn(std::span<const Complex> symbols, double noise_var, RandomStream& rng) {
  if (noise_var < 0.0) throw Error("noise variance must be nonnegative");
  std::vector<Complex> out(symbols.begin(), symbols.end());
  if (noise_var == 0.0) return out;
  for (auto& z : out) z += rng.complex_normal(noise_var);
  return out;
}

}  // namespace lfbf
