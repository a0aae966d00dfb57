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

#include "lfbf/codebook.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "lfbf/random.hpp"

namespace lfbf {

Codebook::Codebook(std::vector<CVector> vectors, unsigned bits, std::size_t dim,
                   std::uint32_t seed)
    : vectors_(std::move(vectors)), bits_(bits), dim_(dim), seed_(seed) {
  if (bits_ > kMaxCodebookBits)
    throw CodebookTooLarge(std::to_string(bits_) + " bits exceeds the " +
                           std::to_string(kMaxCodebookBits) + "-bit cap");
  if (vectors_.size() != (std::size_t{1} << bits_))
    throw ShapeMismatch("codebook must hold exactly 2^bits vectors");
  flat_.reserve(vectors_.size() * dim_);
  for (const auto& v : vectors_) {
    if (v.dim() != dim_) throw ShapeMismatch("codeword dimension differs from codebook dim");
    flat_.insert(flat_.end(), v.entries().begin(), v.entries().end());
  }
}

Codebook gen_rvq(std::size_t dim, unsigned bits, std::uint32_t seed) {
  if (bits > kMaxCodebookBits)
    throw CodebookTooLarge(std::to_string(bits) + " bits exceeds the " +
                           std::to_string(kMaxCodebookBits) + "-bit cap");
  if (dim == 0) throw ShapeMismatch("codebook dimension must be positive");
  RandomStream rng(seed);
  const std::size_t count = std::size_t{1} << bits;
  std::vector<CVector> vectors;
  vectors.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    CVector g(dim);
    double len2 = 0.0;
    // A draw of exactly zero has probability zero but would not normalize.
    while (len2 == 0.0) {
      for (std::size_t d = 0; d < dim; ++d) g[d] = rng.complex_normal();
      len2 = g.squared_norm();
    }
    vectors.push_back(g.normalized());
  }
  return Codebook(std::move(vectors), bits, dim, seed);
}

QuantizationResult quantize_direction(const CVector& h, const Codebook& cb) {
  if (h.dim() != cb.dim()) throw ShapeMismatch("channel and codebook dimensions differ");
  const double h2 = h.squared_norm();
  if (h2 == 0.0) throw ZeroChannel("cannot quantize the direction of a zero channel");
  QuantizationResult best;
  double best_corr = -1.0;
  for (std::size_t i = 0; i < cb.size(); ++i) {
    const double corr = std::norm(inner(h, cb[i]));
    if (corr > best_corr) {
      best_corr = corr;
      best.index = i;
    }
  }
  best.metric = best_corr / h2;
  best.distortion = std::max(0.0, 1.0 - best.metric);
  return best;
}

QuantizationResult select_beamformer(const CMatrix& h, const Codebook& cb, double rho) {
  if (!(rho > 0.0)) throw Error("select_beamformer requires rho > 0");
  if (h.cols() != cb.dim()) throw ShapeMismatch("channel columns differ from codebook dim");
  const std::size_t rows = h.rows();
  const std::size_t dim = cb.dim();
  const std::span<const Complex> h_entries = h.entries();
  const std::span<const Complex> words = cb.flat();
  QuantizationResult best;
  double best_gain = -1.0;
  for (std::size_t i = 0; i < cb.size(); ++i) {
    const Complex* w = words.data() + i * dim;
    double gain = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
      const Complex* h_row = h_entries.data() + r * dim;
      double re = 0.0;
      double im = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        re += h_row[c].real() * w[c].real() - h_row[c].imag() * w[c].imag();
        im += h_row[c].real() * w[c].imag() + h_row[c].imag() * w[c].real();
      }
      gain += re * re + im * im;
    }
    if (gain > best_gain) {
      best_gain = gain;
      best.index = i;
    }
  }
  best.metric = best_gain;
  return best;
}

namespace {

template <typename T>
void put_le(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes;
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& in) {
  std::array<char, sizeof(T)> bytes;
  if (!in.read(bytes.data(), bytes.size())) throw Error("codebook file truncated");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}

}  // namespace

void write_codebook(std::ostream& out, const Codebook& cb) {
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(cb.dim()));
  put_le<std::uint32_t>(out, cb.bits());
  put_le<std::uint32_t>(out, cb.seed());
  for (const auto& v : cb.vectors())
    for (const auto& z : v.entries()) {
      put_le<double>(out, z.real());
      put_le<double>(out, z.imag());
    }
  if (!out) throw Error("failed writing codebook");
}

Codebook read_codebook(std::istream& in) {
  const auto dim = get_le<std::uint32_t>(in);
  const auto bits = get_le<std::uint32_t>(in);
  const auto seed = get_le<std::uint32_t>(in);
  if (bits > kMaxCodebookBits)
    throw CodebookTooLarge("codebook file declares " + std::to_string(bits) + " bits");
  if (dim == 0) throw Error("codebook file declares zero dimension");
  const std::size_t count = std::size_t{1} << bits;
  std::vector<CVector> vectors;
  vectors.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    CVector v(dim);
    for (std::size_t d = 0; d < dim; ++d) {
      const double re = get_le<double>(in);
      const double im = get_le<double>(in);
      v[d] = {re, im};
    }
    vectors.push_back(std::move(v));
  }
  if (in.peek() != std::char_traits<char>::eof()) throw Error("trailing bytes after codebook");
  return Codebook(std::move(vectors), bits, dim, seed);
}

void save_codebook(const std::filesystem::path& path, const Codebook& cb) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_codebook(out, cb);
}

Codebook load_codebook(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return read_codebook(in);
}

}  // namespace lfbf
