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

#include <sstream>

#include "lfbf/beamforming.hpp"
#include "lfbf/channel.hpp"
#include "lfbf/simulator.hpp"
#include "oracles.hpp"

using namespace lfbf;

namespace {

SimConfig small_config() {
  SimConfig c;
  c.n_subcarriers = 16;
  c.n_taps = 4;
  c.snr_db_points = {0.0, 6.0};
  c.target_errors = 100;
  c.max_bits = 50'000;
  return c;
}

}  // namespace

TEST_CASE("Feedback") {
  CHECK(Feedback::parse("perfect").is_perfect());
  CHECK(Feedback::parse("7").bit_count() == 7);
  CHECK(Feedback::bits(3).to_string() == "3");
  CHECK_THROWS_AS(Feedback::parse("-1"), ConfigError);
  CHECK_THROWS_AS(Feedback::parse("4x"), ConfigError);
  CHECK_THROWS_AS(Feedback::parse(""), ConfigError);
}

TEST_CASE("validate") {
  SimConfig c = small_config();
  CHECK_NOTHROW(validate(c));
  c.snr_db_points = {10, 5, 0};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small_config();
  c.n_t = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small_config();
  c.n_subcarriers = 2;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small_config();
  c.csi_mode = CsiMode::kEstimated;
  c.n_pilots = 1;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small_config();
  c.feedback = Feedback::bits(21);
  CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("noise variance bookkeeping") {
  SimConfig c = small_config();
  CHECK(noise_variance(c, 0.0) == doctest::Approx(1.0 / 16));
  CHECK(noise_variance(c, 10.0) == doctest::Approx(1.0 / 160));
}

TEST_CASE("run_trial") {
  SUBCASE("noiseless chain makes no errors") {
    for (auto mode : {CsiMode::kPerfect, CsiMode::kEstimated})
      for (auto mod : {Modulation::kBpsk, Modulation::kQpsk})
        for (auto fb : {Feedback::perfect(), Feedback::bits(0), Feedback::bits(3)})
          for (std::size_t nr : {1u, 2u}) {
            SimConfig c = small_config();
            c.csi_mode = mode;
            c.modulation = mod;
            c.feedback = fb;
            c.n_r = nr;
            for (std::uint64_t t = 0; t < 20; ++t) {
              const TrialResult r = run_trial(c, 300.0, t);
              CHECK(r.bit_errors == 0);
              CHECK(r.bits_sent == 16 * bits_per_symbol(mod));
            }
          }
  }

  SUBCASE("deterministic per (seed, trial)") {
    SimConfig c = small_config();
    c.feedback = Feedback::bits(2);
    CHECK(run_trial(c, 3.0, 17) == run_trial(c, 3.0, 17));
    c.master_seed = 2;
    bool any_diff = false;
    SimConfig other = c;
    other.master_seed = 3;
    for (std::uint64_t t = 0; t < 20; ++t)
      any_diff |= !(run_trial(c, 0.0, t) == run_trial(other, 0.0, t));
    CHECK(any_diff);
  }
}

TEST_CASE("post-combining SNR for two-branch transmit beamforming") {
  // Fixed 1x2 channel h: the optimal beam gives |a^H H b|^2 = (P/N)||h||^2.
  const CMatrix h{{Complex(0.6, -0.3), Complex(-1.1, 0.4)}};
  const double h2 = 0.36 + 0.09 + 1.21 + 0.16;
  SimConfig c = small_config();
  const double sigma2 = noise_variance(c, 7.0);
  const std::vector<CVector> dirs = {optimal_beamformer(h)};
  const CVector b = apply_power_constraint(dirs, kBlockPower / c.n_subcarriers)[0];
  const CVector a = mrc_receive(h, b);
  const double signal = std::norm(effective_scalar_channel(h, b, a));
  CHECK(signal == doctest::Approx(h2 / c.n_subcarriers).epsilon(1e-12));

  // Measured noise after combining matches sigma^2, so the SNR is rho*||h||^2.
  RandomStream rng(5);
  double noise = 0.0;
  constexpr int kDraws = 200'000;
  for (int i = 0; i < kDraws; ++i) noise += std::norm(std::conj(a[0]) * rng.complex_normal(sigma2));
  const double snr = signal / (noise / kDraws);
  CHECK(snr == doctest::Approx(oracle::db_to_linear(7.0) * h2).epsilon(0.01));
}

TEST_CASE("run_sweep") {
  SUBCASE("one point per SNR and the stopping rule") {
    SimConfig c = small_config();
    const BerCurve curve = run_sweep(c, "x", {1});
    REQUIRE(curve.points.size() == 2);
    for (const auto& p : curve.points) {
      CHECK((p.bit_errors >= c.target_errors || p.bits_sent >= c.max_bits));
      CHECK(p.ber * p.bits_sent == doctest::Approx(double(p.bit_errors)));
      CHECK(p.ber >= 0.0);
      CHECK(p.ber <= 1.0);
    }
    CHECK(curve.points[0].snr_db == 0.0);
    CHECK(curve.points[1].snr_db == 6.0);
  }

  SUBCASE("same result for any worker count") {
    SimConfig c = small_config();
    c.feedback = Feedback::bits(2);
    const BerCurve one = run_sweep(c, "x", {1});
    for (unsigned threads : {2u, 3u, 8u}) {
      const BerCurve many = run_sweep(c, "x", {threads});
      for (std::size_t i = 0; i < one.points.size(); ++i) {
        CHECK(one.points[i].bits_sent == many.points[i].bits_sent);
        CHECK(one.points[i].bit_errors == many.points[i].bit_errors);
        CHECK(one.points[i].trials == many.points[i].trials);
      }
    }
  }

  SUBCASE("max_bits flags under-converged points") {
    SimConfig c = small_config();
    c.snr_db_points = {30.0};
    c.max_bits = 1000;
    const BerCurve curve = run_sweep(c, "x", {1});
    CHECK_FALSE(curve.points[0].converged);
    CHECK(curve.points[0].bits_sent >= 1000);
    CHECK(curve.points[0].bits_sent < 1000 + 16);
  }
}

TEST_CASE("curve CSV") {
  BerCurve curve;
  curve.label = "perfect";
  TrialResult totals{1000, 10, 0};
  curve.points.push_back(make_point(2.5, totals, 10, false));
  std::ostringstream out;
  write_curve_csv(out, curve);
  const double hw = 1.96 * std::sqrt(0.01 * 0.99 / 1000);
  char expected_row[128];
  std::snprintf(expected_row, sizeof expected_row, "2.5,1000,10,1.000000000e-02,%.9e\n", hw);
  CHECK(out.str() == std::string("snr_db,bits,errors,ber,ci95\n") + expected_row);
}
