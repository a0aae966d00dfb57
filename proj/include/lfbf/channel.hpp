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

#include <cstddef>
#include <vector>

#include "lfbf/numerics.hpp"
#include "lfbf/random.hpp"

namespace lfbf {

/// Time-domain MIMO impulse response: L taps, each n_r x n_t.
struct ChannelTaps {
  std::vector<CMatrix> taps;

  std::size_t length() const { return taps.size(); }
  std::size_t n_r() const { return taps.empty() ? 0 : taps.front().rows(); }
  std::size_t n_t() const { return taps.empty() ? 0 : taps.front().cols(); }
};

/// Per-subcarrier channel matrices of one OFDM block.
struct ChannelRealization {
  std::vector<CMatrix> per_subcarrier;
  ChannelTaps source_taps;

  std::size_t n_subcarriers() const { return per_subcarrier.size(); }
};

/// Orthogonal training block, n_t x n_p, unit-modulus entries.
struct TrainingSequence {
  CMatrix symbols;

  std::size_t n_t() const { return symbols.rows(); }
  std::size_t n_pilots() const { return symbols.cols(); }
};

/// i.i.d. CN(0, 1) entries.
CMatrix gen_rayleigh_flat(std::size_t n_r, std::size_t n_t, RandomStream& rng);

/// L i.i.d. taps with CN(0, 1/L) entries (uniform power-delay profile).
ChannelTaps gen_selective_taps(std::size_t n_r, std::size_t n_t, std::size_t n_taps,
                               RandomStream& rng);

/// H_k = sum_l taps[l] exp(-j 2 pi k l / N), k = 0..N-1.
ChannelRealization to_subcarriers(const ChannelTaps& taps, std::size_t n_subcarriers);

/// Rows r, columns c: exp(j 2 pi r c / n_p). Throws InvalidLength if n_p < n_t.
TrainingSequence make_phase_shift_training(std::size_t n_t, std::size_t n_p);

/// Least-squares estimate Y S^H / N_p for orthogonal training.
CMatrix ls_estimate(const CMatrix& received, const TrainingSequence& training);

}  // namespace lfbf
