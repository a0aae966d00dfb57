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

#include "lfbf/beamforming.hpp"

#include <cmath>
#include <string>

namespace lfbf {

CVector optimal_beamformer(const CMatrix& h) {
  return dominant_right_eigvec_or_fallback(h).vector;
}

CVector mrc_receive(const CMatrix& h, const CVector& b) {
  CVector hb = h * b;
  const double len = hb.norm();
  if (len == 0.0) throw NullEffectiveChannel("transmit beam lies in the channel null space");
  hb *= Complex(1.0 / len);
  return hb;
}

BeamformPair make_beamform_pair(const CMatrix& h, const CVector& b) {
  BeamformPair pair;
  pair.transmit = b;
  pair.receive = mrc_receive(h, b);
  pair.gain = std::norm(effective_scalar_channel(h, b, pair.receive)) / b.squared_norm();
  return pair;
}

std::vector<CVector> apply_power_constraint(std::span<const CVector> beams, double total_power) {
  if (!(total_power > 0.0)) throw Error("total transmit power must be positive");
  std::vector<CVector> out;
  out.reserve(beams.size());
  const double per_beam = std::sqrt(total_power / static_cast<double>(beams.size()));
  for (const auto& b : beams) {
    CVector scaled = b.normalized();
    scaled *= Complex(per_beam);
    out.push_back(std::move(scaled));
  }
  return out;
}

PrecoderSet zfbf_precoders(std::span<const CVector> directions) {
  const std::size_t m = directions.size();
  for (const auto& d : directions)
    if (d.dim() != m)
      throw ShapeMismatch("zero-forcing needs M directions of dimension M, got dim " +
                          std::to_string(d.dim()) + " for M = " + std::to_string(m));
  const CMatrix stacked = CMatrix::from_conjugate_rows(directions);
  CMatrix inverse;
  try {
    inverse = mat_inverse(stacked);
  } catch (const SingularMatrix& e) {
    throw SingularStack(std::string("quantized directions are linearly dependent: ") + e.what());
  }
  PrecoderSet out;
  out.source_directions.assign(directions.begin(), directions.end());
  out.vectors.reserve(m);
  for (std::size_t j = 0; j < m; ++j) out.vectors.push_back(inverse.column(j).normalized());
  return out;
}

double zfbf_interference(const CVector& h, const PrecoderSet& precoders, std::size_t user,
                         double total_power) {
  if (user >= precoders.users()) throw ShapeMismatch("user index out of range");
  const double share = total_power / static_cast<double>(precoders.users());
  double interference = 0.0;
  for (std::size_t j = 0; j < precoders.users(); ++j)
    if (j != user) interference += share * std::norm(inner(h, precoders.vectors[j]));
  return interference;
}

double zfbf_sinr(const CVector& h, const PrecoderSet& precoders, std::size_t user,
                 double total_power) {
  const double interference = zfbf_interference(h, precoders, user, total_power);
  const double share = total_power / static_cast<double>(precoders.users());
  const double signal = share * std::norm(inner(h, precoders.vectors[user]));
  return signal / (1.0 + interference);
}

Complex effective_scalar_channel(const CMatrix& h, const CVector& b, const CVector& a) {
  return inner(a, h * b);
}

}  // namespace lfbf
