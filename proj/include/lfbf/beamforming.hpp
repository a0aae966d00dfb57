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
#include <span>
#include <vector>

#include "lfbf/numerics.hpp"

namespace lfbf {

/// Transmit beam b, unit receive combiner a and the resulting power gain
/// |a^H H b|^2 / ||b||^2.
struct BeamformPair {
  CVector transmit;
  CVector receive;
  double gain = 0.0;
};

/// Zero-forcing precoders v_1..v_M built from quantized directions.
struct PrecoderSet {
  std::vector<CVector> vectors;
  std::vector<CVector> source_directions;

  std::size_t users() const { return vectors.size(); }
};

/// Unquantized optimum: dominant right singular vector of H (unit norm).
CVector optimal_beamformer(const CMatrix& h);

/// Maximum ratio combiner a = H b / ||H b||. Throws NullEffectiveChannel if
/// H b vanishes.
CVector mrc_receive(const CMatrix& h, const CVector& b);

/// Joint transmit beam + MRC receive.
BeamformPair make_beamform_pair(const CMatrix& h, const CVector& b);

/// Uniform power allocation: every returned vector has ||b_k||^2 = P_t / N.
std::vector<CVector> apply_power_constraint(std::span<const CVector> beams, double total_power);

/// Rows of the stacked matrix are the conjugated directions; v_j is column j
/// of its inverse, normalized. Throws SingularStack when the directions are
/// linearly dependent.
PrecoderSet zfbf_precoders(std::span<const CVector> directions);

/// Interference power sum_{j != u} (P/M)|h^H v_j|^2 seen by `user`.
double zfbf_interference(const CVector& h, const PrecoderSet& precoders, std::size_t user,
                         double total_power);

/// (P/M)|h^H v_u|^2 / (1 + sum_{j != u} (P/M)|h^H v_j|^2), unit noise power.
double zfbf_sinr(const CVector& h, const PrecoderSet& precoders, std::size_t user,
                 double total_power);

/// g = a^H H b.
Complex effective_scalar_channel(const CMatrix& h, const CVector& b, const CVector& a);

}  // namespace lfbf
