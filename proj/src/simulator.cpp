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

#include "lfbf/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "lfbf/beamforming.hpp"
#include "lfbf/channel.hpp"
#include "lfbf/codebook.hpp"
#include "lfbf/random.hpp"

namespace lfbf {

Feedback Feedback::parse(const std::string& text) {
  if (text == "perfect") return perfect();
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw ConfigError("feedback_bits: expected 'perfect' or a nonnegative integer, got '" +
                      text + "'");
  return bits(value);
}

std::string Feedback::to_string() const {
  return is_perfect() ? "perfect" : std::to_string(*bits_);
}

std::string to_string(CsiMode m) { return m == CsiMode::kPerfect ? "perfect" : "estimated"; }
std::string to_string(CodebookMode m) { return m == CodebookMode::kFresh ? "fresh" : "fixed"; }

void validate(const SimConfig& c) {
  auto fail = [](const std::string& field, const std::string& msg) {
    throw ConfigError(field + ": " + msg);
  };
  if (c.n_t < 1) fail("n_t", "must be at least 1");
  if (c.n_r < 1) fail("n_r", "must be at least 1");
  if (c.n_taps < 1) fail("n_taps", "must be at least 1");
  if (c.n_subcarriers < c.n_taps) fail("n_subcarriers", "must be at least n_taps");
  if (!c.feedback.is_perfect() && c.feedback.bit_count() > kMaxCodebookBits)
    fail("feedback_bits", "at most " + std::to_string(kMaxCodebookBits) + " bits");
  if (c.snr_db_points.empty()) fail("snr_db_points", "must not be empty");
  for (double s : c.snr_db_points)
    if (!std::isfinite(s)) fail("snr_db_points", "values must be finite");
  for (std::size_t i = 1; i < c.snr_db_points.size(); ++i)
    if (!(c.snr_db_points[i] > c.snr_db_points[i - 1]))
      fail("snr_db_points", "must be strictly increasing");
  if (c.target_errors < 1) fail("target_errors", "must be positive");
  if (c.max_bits < 1) fail("max_bits", "must be positive");
  if (c.csi_mode == CsiMode::kEstimated && c.n_pilots < c.n_t)
    fail("n_pilots", "must be at least n_t for orthogonal training");
  if (c.pilot_snr_db && !std::isfinite(*c.pilot_snr_db))
    fail("pilot_snr_db", "must be finite");
}

double noise_variance(const SimConfig& config, double snr_db) {
  const double per_subcarrier_power = kBlockPower / static_cast<double>(config.n_subcarriers);
  return per_subcarrier_power / std::pow(10.0, snr_db / 10.0);
}

namespace {

std::uint32_t codebook_seed(const SimConfig& config, std::uint64_t trial_index) {
  const std::uint64_t index =
      config.codebook_mode == CodebookMode::kFresh ? trial_index : ~std::uint64_t{0};
  return derive_stream(config.master_seed, index, StreamPurpose::kCodebook).next_u32();
}

std::vector<CMatrix> receiver_csi(const SimConfig& config, const ChannelRealization& channel,
                                  double snr_db, std::uint64_t trial_index) {
  if (config.csi_mode == CsiMode::kPerfect) return channel.per_subcarrier;
  const TrainingSequence training = make_phase_shift_training(config.n_t, config.n_pilots);
  const double pilot_snr = config.pilot_snr_db.value_or(snr_db);
  const double pilot_noise = std::pow(10.0, -pilot_snr / 10.0);
  RandomStream rng = derive_stream(config.master_seed, trial_index, StreamPurpose::kPilotNoise);
  std::vector<CMatrix> estimates;
  estimates.reserve(channel.n_subcarriers());
  for (const auto& h : channel.per_subcarrier) {
    CMatrix received = h * training.symbols;
    for (auto& z : received.entries()) z += rng.complex_normal(pilot_noise);
    estimates.push_back(ls_estimate(received, training));
  }
  return estimates;
}

}  // namespace

TrialResult run_trial(const SimConfig& config, double snr_db, std::uint64_t trial_index) {
  const std::size_t n = config.n_subcarriers;
  const double sigma2 = noise_variance(config, snr_db);

  RandomStream channel_rng = derive_stream(config.master_seed, trial_index, StreamPurpose::kChannel);
  const ChannelRealization channel = to_subcarriers(
      gen_selective_taps(config.n_r, config.n_t, config.n_taps, channel_rng), n);
  const std::vector<CMatrix> csi = receiver_csi(config, channel, snr_db, trial_index);

  const unsigned bps = bits_per_symbol(config.modulation);
  RandomStream bit_rng = derive_stream(config.master_seed, trial_index, StreamPurpose::kBits);
  std::vector<Bit> bits(n * bps);
  for (auto& b : bits) b = static_cast<Bit>(bit_rng.bit());
  const std::vector<Complex> symbols = modulate(bits, config.modulation);

  // Receiver picks the beam per subcarrier from its own CSI and feeds it back.
  std::vector<CVector> directions;
  directions.reserve(n);
  if (config.feedback.is_perfect()) {
    for (const auto& h : csi) directions.push_back(optimal_beamformer(h));
  } else {
    const Codebook cb =
        gen_rvq(config.n_t, config.feedback.bit_count(), codebook_seed(config, trial_index));
    const double rho = 1.0 / sigma2;
    for (const auto& h : csi) directions.push_back(cb[select_beamformer(h, cb, rho).index]);
  }
  const std::vector<CVector> beams = apply_power_constraint(directions, kBlockPower);

  RandomStream noise_rng = derive_stream(config.master_seed, trial_index, StreamPurpose::kNoise);
  TrialResult result;
  std::array<Complex, 1> equalized{};
  for (std::size_t k = 0; k < n; ++k) {
    CVector received = channel.per_subcarrier[k] * beams[k];
    received *= symbols[k];
    for (auto& z : received.entries()) z += noise_rng.complex_normal(sigma2);

    CVector combiner;
    try {
      combiner = mrc_receive(csi[k], beams[k]);
    } catch (const NullEffectiveChannel&) {
      ++result.null_channels;
      continue;
    }
    // Phase-correct with the receiver's view of the effective channel.
    const Complex expected_gain = effective_scalar_channel(csi[k], beams[k], combiner);
    equalized[0] = inner(combiner, received) * std::conj(expected_gain);
    const std::vector<Bit> decided = demodulate(equalized, config.modulation);
    for (unsigned i = 0; i < bps; ++i)
      result.bit_errors += decided[i] != bits[k * bps + i] ? 1 : 0;
    result.bits_sent += bps;
  }
  return result;
}

BerPoint make_point(double snr_db, const TrialResult& totals, std::uint64_t trials,
                    bool converged) {
  BerPoint p;
  p.snr_db = snr_db;
  p.bits_sent = totals.bits_sent;
  p.bit_errors = totals.bit_errors;
  p.null_channels = totals.null_channels;
  p.trials = trials;
  p.converged = converged;
  if (p.bits_sent > 0) {
    p.ber = static_cast<double>(p.bit_errors) / static_cast<double>(p.bits_sent);
    p.half_width_95 = 1.96 * std::sqrt(p.ber * (1.0 - p.ber) / static_cast<double>(p.bits_sent));
  }
  return p;
}

namespace {

template <typename Fn>
void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned threads, Fn&& fn) {
  if (threads <= 1 || end - begin <= 1) {
    for (std::uint64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{begin};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < end; i = next++) fn(i);
  };
  std::vector<std::jthread> pool;
  const auto count = static_cast<unsigned>(std::min<std::uint64_t>(threads, end - begin));
  pool.reserve(count - 1);
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
}

BerPoint run_point(const SimConfig& config, double snr_db, unsigned threads) {
  TrialResult totals;
  std::uint64_t trials = 0;
  std::uint64_t batch = std::max<std::uint64_t>(16, 4 * threads);
  const std::uint64_t max_batch = std::max<std::uint64_t>(4096, 64 * threads);
  std::vector<TrialResult> results;
  for (;;) {
    results.assign(batch, TrialResult{});
    const std::uint64_t first = trials;
    parallel_for(0, batch, threads,
                 [&](std::uint64_t i) { results[i] = run_trial(config, snr_db, first + i); });
    for (const auto& r : results) {
      totals.bits_sent += r.bits_sent;
      totals.bit_errors += r.bit_errors;
      totals.null_channels += r.null_channels;
      ++trials;
      const bool hit_target = totals.bit_errors >= config.target_errors;
      if (hit_target || totals.bits_sent >= config.max_bits)
        return make_point(snr_db, totals, trials, hit_target);
    }
    batch = std::min(batch * 2, max_batch);
  }
}

}  // namespace

BerCurve run_sweep(const SimConfig& config, const std::string& label,
                   const SweepOptions& options) {
  validate(config);
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  BerCurve curve{config, {}, label};
  curve.points.reserve(config.snr_db_points.size());
  for (double snr : config.snr_db_points) curve.points.push_back(run_point(config, snr, threads));
  return curve;
}

void write_curve_csv(std::ostream& out, const BerCurve& curve) {
  out << "snr_db,bits,errors,ber,ci95\n";
  char line[160];
  for (const auto& p : curve.points) {
    std::snprintf(line, sizeof line, "%.6g,%llu,%llu,%.9e,%.9e\n", p.snr_db,
                  static_cast<unsigned long long>(p.bits_sent),
                  static_cast<unsigned long long>(p.bit_errors), p.ber, p.half_width_95);
    out << line;
  }
}

}  // namespace lfbf
