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

#include "lfbf/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace lfbf {

CMatrix gen_rayleigh_flat(std::size_t n_r, std::size_t n_t, RandomStream& rng) {
  CMatrix h(n_r, n_t);
  for (auto& z : h.entries()) z = rng.complex_normal();
  return h;
}

ChannelTaps gen_selective_taps(std::size_t n_r, std::size_t n_t, std::size_t n_taps,
                               RandomStream& rng) {
  if (n_taps == 0) throw InvalidLength("channel needs at least one tap");
  const double tap_variance = 1.0 / static_cast<double>(n_taps);
  ChannelTaps out;
  out.taps.reserve(n_taps);
  for (std::size_t l = 0; l < n_taps; ++l) {
    CMatrix h(n_r, n_t);
    for (auto& z : h.entries()) z = rng.complex_normal(tap_variance);
    out.taps.push_back(std::move(h));
  }
  return out;
}

ChannelRealization to_subcarriers(const ChannelTaps& taps, std::size_t n_subcarriers) {
  if (taps.length() == 0) throw InvalidLength("channel has no taps");
  if (n_subcarriers < taps.length())
    throw InvalidLength("need at least as many subcarriers as taps");
  const std::size_t n = n_subcarriers;
  // twiddle[m] = exp(-j 2 pi m / N); k*l is reduced mod N before lookup.
  std::vector<Complex> twiddle(n);
  for (std::size_t m = 0; m < n; ++m)
    twiddle[m] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(m) /
                                     static_cast<double>(n));
  ChannelRealization out;
  out.source_taps = taps;
  out.per_subcarrier.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    CMatrix h(taps.n_r(), taps.n_t());
    auto dst = h.entries();
    for (std::size_t l = 0; l < taps.length(); ++l) {
      const Complex w = twiddle[(k * l) % n];
      const auto src = taps.taps[l].entries();
      for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i] * w;
    }
    out.per_subcarrier.push_back(std::move(h));
  }
  return out;
}

TrainingSequence make_phase_shift_training(std::size_t n_t, std::size_t n_p) {
  if (n_p < n_t)
    throw InvalidLength("training length " + std::to_string(n_p) + " shorter than " +
                        std::to_string(n_t) + " transmit antennas");
  CMatrix s(n_t, n_p);
  for (std::size_t r = 0; r < n_t; ++r)
    for (std::size_t c = 0; c < n_p; ++c) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((r * c) % n_p) /
                           static_cast<double>(n_p);
      s(r, c) = std::polar(1.0, angle);
    }
  return {std::move(s)};
}

CMatrix ls_estimate(const CMatrix& received, const TrainingSequence& training) {
  if (received.cols() != training.n_pilots())
    throw ShapeMismatch("received block has " + std::to_string(received.cols()) +
                        " samples, training has " + std::to_string(training.n_pilots()));
  CMatrix h = received * hermitian(training.symbols);
  h *= Complex(1.0 / static_cast<double>(training.n_pilots()));
  return h;
}

}  // namespace lfbf
