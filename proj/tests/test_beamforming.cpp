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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lfbf/beamforming.hpp"
#include "oracles.hpp"

using namespace lfbf;

namespace {

double max_abs_diff(const CVector& a, const CVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_cross_talk(const PrecoderSet& p) {
  double worst = 0.0;
  for (std::size_t i = 0; i < p.users(); ++i)
    for (std::size_t j = 0; j < p.users(); ++j)
      if (i != j) worst = std::max(worst, std::abs(inner(p.source_directions[i], p.vectors[j])));
  return worst;
}

}  // namespace

TEST_CASE("mrc_receive") {
  SUBCASE("identity channel") {
    const CVector b{1.0, 0.0};
    const CVector a = mrc_receive(CMatrix::identity(2), b);
    CHECK(max_abs_diff(a, b) < 1e-15);
    CHECK(effective_scalar_channel(CMatrix::identity(2), b, a) == Complex(1.0));
  }

  SUBCASE("diagonal channel") {
    const std::vector<Complex> d = {3.0, 4.0};
    const CMatrix h = CMatrix::diagonal(d);
    const CVector b{0.0, 1.0};
    const BeamformPair pair = make_beamform_pair(h, b);
    CHECK(max_abs_diff(pair.receive, CVector{0.0, 1.0}) < 1e-15);
    CHECK(std::abs(effective_scalar_channel(h, b, pair.receive) - 4.0) < 1e-15);
    CHECK(pair.gain == doctest::Approx(16.0));
  }

  SUBCASE("with the optimal beam the gain is sigma_max^2") {
    RandomStream rng(80);
    for (int i = 0; i < 200; ++i) {
      const CMatrix h = oracle::random_matrix(2, 2, rng);
      const CVector b = optimal_beamformer(h);
      const CVector a = mrc_receive(h, b);
      const Complex g = effective_scalar_channel(h, b, a);
      CHECK(std::abs(g.imag()) < 1e-12);
      CHECK(g.real() >= 0.0);
      CHECK(std::abs(std::norm(g) - oracle::sigma_max_sq_2col(h)) <= 1e-9);
      CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  SUBCASE("maximizes the combined gain over unit receivers") {
    RandomStream rng(81);
    for (int m = 0; m < 10; ++m) {
      const CMatrix h = oracle::random_matrix(3, 2, rng);
      const CVector b = oracle::random_vector(2, rng);
      const double best = std::norm(effective_scalar_channel(h, b, mrc_receive(h, b)));
      for (int t = 0; t < 1000; ++t) {
        const CVector a = oracle::random_unit_vector(3, rng);
        REQUIRE(std::norm(effective_scalar_channel(h, b, a)) <= best + 1e-12);
      }
    }
  }

  SUBCASE("null effective channel") {
    const CMatrix h{{1.0, 0.0}};
    CHECK_THROWS_AS(mrc_receive(h, CVector{0.0, 1.0}), NullEffectiveChannel);
  }
}

TEST_CASE("apply_power_constraint") {
  SUBCASE("single beam gets all the power") {
    const std::vector<CVector> beams = {CVector{3.0, Complex(0.0, 4.0)}};
    const auto out = apply_power_constraint(beams, 1.0);
    CHECK(out[0].squared_norm() == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("uniform split") {
    RandomStream rng(90);
    std::vector<CVector> beams;
    for (int i = 0; i < 4; ++i) beams.push_back(oracle::random_vector(2, rng));
    const auto out = apply_power_constraint(beams, 2.0);
    double total = 0.0;
    for (const auto& b : out) {
      CHECK(std::abs(b.squared_norm() - 0.5) <= 1e-12);
      total += b.squared_norm();
    }
    CHECK(total == doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("input scale is absorbed") {
    RandomStream rng(91);
    std::vector<CVector> beams, scaled;
    for (int i = 0; i < 3; ++i) {
      beams.push_back(oracle::random_vector(2, rng));
      scaled.push_back(Complex(0.1 + 7.0 * i) * beams.back());
    }
    const auto a = apply_power_constraint(beams, 3.0);
    const auto b = apply_power_constraint(scaled, 3.0);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(max_abs_diff(a[i], b[i]) < 1e-14);
  }
}

TEST_CASE("zfbf_precoders") {
  SUBCASE("orthonormal directions") {
    const std::vector<CVector> dirs = {CVector{1.0, 0.0}, CVector{0.0, 1.0}};
    const PrecoderSet p = zfbf_precoders(dirs);
    CHECK(max_abs_diff(p.vectors[0], dirs[0]) < 1e-15);
    CHECK(max_abs_diff(p.vectors[1], dirs[1]) < 1e-15);
  }

  SUBCASE("hand-inverted 2x2") {
    // Rows (1, 0) and (1, 1)/sqrt2 invert to [[1, 0], [-1, sqrt2]].
    const double r = 1.0 / std::sqrt(2.0);
    const std::vector<CVector> dirs = {CVector{1.0, 0.0}, CVector{r, r}};
    const PrecoderSet p = zfbf_precoders(dirs);
    CHECK(max_abs_diff(p.vectors[0], CVector{r, -r}) < 1e-12);
    CHECK(max_abs_diff(p.vectors[1], CVector{0.0, 1.0}) < 1e-12);
    CHECK(max_cross_talk(p) <= 1e-12);
  }

  SUBCASE("random directions satisfy the zero-forcing invariants") {
    RandomStream rng(100);
    for (int t = 0; t < 2000; ++t) {
      const std::size_t m = 2 + t % 3;
      std::vector<CVector> dirs;
      for (std::size_t i = 0; i < m; ++i) dirs.push_back(oracle::random_unit_vector(m, rng));
      PrecoderSet p;
      try {
        p = zfbf_precoders(dirs);
      } catch (const SingularStack&) {
        continue;
      }
      CHECK(max_cross_talk(p) <= 1e-9);
      for (const auto& v : p.vectors) CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
    }
  }

  SUBCASE("dependent directions") {
    const std::vector<CVector> dirs = {CVector{1.0, 0.0}, CVector{Complex(0.0, 1.0), 0.0}};
    CHECK_THROWS_AS(zfbf_precoders(dirs), SingularStack);
  }

  SUBCASE("wrong dimension") {
    const std::vector<CVector> dirs = {CVector{1.0, 0.0, 0.0}, CVector{0.0, 1.0, 0.0}};
    CHECK_THROWS_AS(zfbf_precoders(dirs), ShapeMismatch);
  }
}

TEST_CASE("zfbf_sinr") {
  SUBCASE("orthogonal plug-in") {
    const std::vector<CVector> dirs = {CVector{1.0, 0.0}, CVector{0.0, 1.0}};
    const PrecoderSet p = zfbf_precoders(dirs);
    CHECK(zfbf_sinr(CVector{1.0, 0.0}, p, 0, 4.0) == doctest::Approx(2.0));
  }

  SUBCASE("perfect quantization leaves no interference") {
    RandomStream rng(110);
    for (int t = 0; t < 500; ++t) {
      std::vector<CVector> h = {oracle::random_vector(2, rng), oracle::random_vector(2, rng)};
      const std::vector<CVector> dirs = {h[0].normalized(), h[1].normalized()};
      const PrecoderSet p = zfbf_precoders(dirs);
      for (std::size_t u = 0; u < 2; ++u) {
        CHECK(zfbf_interference(h[u], p, u, 10.0) <= 1e-18 * h[u].squared_norm());
        const double signal = 5.0 * std::norm(inner(h[u], p.vectors[u]));
        CHECK(zfbf_sinr(h[u], p, u, 10.0) == doctest::Approx(signal).epsilon(1e-12));
      }
    }
  }

  SUBCASE("global phase of the channel does not matter") {
    RandomStream rng(111);
    const std::vector<CVector> dirs = {oracle::random_unit_vector(2, rng),
                                       oracle::random_unit_vector(2, rng)};
    const PrecoderSet p = zfbf_precoders(dirs);
    const CVector h = oracle::random_vector(2, rng);
    CHECK(zfbf_sinr(std::polar(1.0, 2.3) * h, p, 1, 3.0) ==
          doctest::Approx(zfbf_sinr(h, p, 1, 3.0)).epsilon(1e-13));
  }
}

TEST_CASE("effective_scalar_channel") {
  SUBCASE("aligned identity") {
    const CVector b = CVector{1.0, 1.0}.normalized();
    CHECK(std::abs(effective_scalar_channel(CMatrix::identity(2), b, b) - 1.0) < 1e-15);
  }
  SUBCASE("orthogonal receiver") {
    const CMatrix h = CMatrix::identity(2);
    CHECK(effective_scalar_channel(h, CVector{1.0, 0.0}, CVector{0.0, 1.0}) == Complex{});
  }
  SUBCASE("operator norm bound") {
    RandomStream rng(120);
    for (int t = 0; t < 500; ++t) {
      const CMatrix h = oracle::random_matrix(2, 2, rng);
      const CVector b = oracle::random_vector(2, rng);
      const CVector a = oracle::random_unit_vector(2, rng);
      CHECK(std::norm(effective_scalar_channel(h, b, a)) <=
            b.squared_norm() * oracle::sigma_max_sq_2col(h) + 1e-9);
    }
  }
}

TEST_CASE("unit combiner keeps the noise variance") {
  RandomStream rng(130);
  const CVector a = oracle::random_unit_vector(2, rng);
  constexpr double kSigma2 = 0.37;
  constexpr int kDraws = 200'000;
  double acc = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const CVector n{rng.complex_normal(kSigma2), rng.complex_normal(kSigma2)};
    acc += std::norm(inner(a, n));
  }
  CHECK(acc / kDraws == doctest::Approx(kSigma2).epsilon(0.01));
}
