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
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "lfbf/numerics.hpp"

namespace lfbf {

inline constexpr unsigned kMaxCodebookBits = 20;

/// 2^bits unit-norm vectors of dimension `dim`, reproducible from `seed`.
class Codebook {
 public:
  Codebook(std::vector<CVector> vectors, unsigned bits, std::size_t dim, std::uint32_t seed);

  const std::vector<CVector>& vectors() const { return vectors_; }
  const CVector& operator[](std::size_t i) const { return vectors_[i]; }
  std::size_t size() const { return vectors_.size(); }
  unsigned bits() const { return bits_; }
  std::size_t dim() const { return dim_; }
  std::uint32_t seed() const { return seed_; }

  /// All codewords back to back, size() * dim() entries.
  std::span<const Complex> flat() const { return flat_; }

  bool operator==(const Codebook& other) const {
    return bits_ == other.bits_ && dim_ == other.dim_ && seed_ == other.seed_ &&
           vectors_ == other.vectors_;
  }

 private:
  std::vector<CVector> vectors_;
  std::vector<Complex> flat_;
  unsigned bits_;
  std::size_t dim_;
  std::uint32_t seed_;
};

/// Random vector quantization codebook: each entry is g / ||g|| with g drawn
/// i.i.d. CN(0, 1)^dim. Entries are drawn sequentially, so the first 2^b
/// vectors of a codebook equal the whole codebook generated with b bits from
/// the same seed.
///
/// Throws CodebookTooLarge when bits > kMaxCodebookBits.
Codebook gen_rvq(std::size_t dim, unsigned bits, std::uint32_t seed);

struct QuantizationResult {
  std::size_t index = 0;
  /// sin^2 of the angle between the input and the chosen codeword.
  double distortion = 0.0;
  /// Value of the selection metric at `index`.
  double metric = 0.0;
};

/// Minimum-angle quantization of a channel direction; ties go to the lowest
/// index. `metric` holds |h^H w|^2 / ||h||^2.
QuantizationResult quantize_direction(const CVector& h, const Codebook& cb);

/// Codeword maximizing log(1 + rho ||H w||^2), equivalently ||H w||^2.
/// `metric` holds ||H w||^2; `distortion` is left at zero. Ties go to the
/// lowest index.
QuantizationResult select_beamformer(const CMatrix& h, const Codebook& cb, double rho);

/// Binary layout: dim, bits, seed as little-endian u32, then each vector's
/// entries as interleaved little-endian f64 (real, imag).
void write_codebook(std::ostream& out, const Codebook& cb);
Codebook read_codebook(std::istream& in);
void save_codebook(const std::filesystem::path& path, const Codebook& cb);
Codebook load_codebook(const std::filesystem::path& path);

}  // namespace lfbf
