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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lfbf/modulation.hpp"

namespace lfbf {

/// Number of feedback bits, or unlimited feedback (unquantized optimum beam).
class Feedback {
 public:
  static Feedback perfect() { return Feedback(); }
  static Feedback bits(unsigned b) { return Feedback(b); }
  /// Parses "perfect" or a nonnegative integer; throws ConfigError.
  static Feedback parse(const std::string& text);

  bool is_perfect() const { return !bits_.has_value(); }
  unsigned bit_count() const { return bits_.value(); }
  /// "perfect" or the decimal bit count.
  std::string to_string() const;

  bool operator==(const Feedback&) const = default;

 private:
  Feedback() = default;
  explicit Feedback(unsigned b) : bits_(b) {}
  std::optional<unsigned> bits_;
};

enum class CsiMode { kPerfect, kEstimated };
enum class CodebookMode { kFresh, kFixed };

std::string to_string(CsiMode m);
std::string to_string(CodebookMode m);

struct SimConfig {
  std::size_t n_t = 2;
  std::size_t n_r = 1;
  std::size_t n_subcarriers = 64;
  std::size_t n_taps = 4;
  Feedback feedback = Feedback::bits(4);
  Modulation modulation = Modulation::kBpsk;
  std::vector<double> snr_db_points = {0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
  std::uint64_t target_errors = 200;
  std::uint64_t max_bits = 10'000'000;
  CsiMode csi_mode = CsiMode::kPerfect;
  std::size_t n_pilots = 2;
  /// Pilot SNR; when unset the pilots see the data SNR of the current point.
  std::optional<double> pilot_snr_db;
  CodebookMode codebook_mode = CodebookMode::kFresh;
  std::uint64_t master_seed = 1;

  bool operator==(const SimConfig&) const = default;
};

/// Throws ConfigError naming the offending field.
void validate(const SimConfig& config);

/// Total transmit power per OFDM block; split evenly over the subcarriers.
inline constexpr double kBlockPower = 1.0;

/// Per-subcarrier noise variance for an SNR point. The SNR is the ratio of
/// per-subcarrier transmit power P/N to the noise variance.
double noise_variance(const SimConfig& config, double snr_db);

struct TrialResult {
  std::uint64_t bits_sent = 0;
  std::uint64_t bit_errors = 0;
  /// Subcarriers skipped because the chosen beam met a null effective channel.
  std::uint64_t null_channels = 0;

  bool operator==(const TrialResult&) const = default;
};

/// One OFDM block at the given SNR. Depends only on (config, snr_db,
/// trial_index).
TrialResult run_trial(const SimConfig& config, double snr_db, std::uint64_t trial_index);

struct BerPoint {
  double snr_db = 0.0;
  std::uint64_t bits_sent = 0;
  std::uint64_t bit_errors = 0;
  double ber = 0.0;
  /// Normal-approximation 95% binomial half-width.
  double half_width_95 = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t null_channels = 0;
  /// False when the point stopped on max_bits before reaching target_errors.
  bool converged = false;
};

struct BerCurve {
  SimConfig config;
  std::vector<BerPoint> points;
  std::string label;
};

struct SweepOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Runs trials at every SNR point until bit_errors >= target_errors or
/// bits_sent >= max_bits. The stopping rule is applied trial by trial in
/// index order, so the curve is identical for any thread count.
BerCurve run_sweep(const SimConfig& config, const std::string& label,
                   const SweepOptions& options = {});

BerPoint make_point(double snr_db, const TrialResult& totals, std::uint64_t trials,
                    bool converged);

/// `snr_db,bits,errors,ber,ci95` header plus one row per point.
void write_curve_csv(std::ostream& out, const BerCurve& curve);

}  // namespace lfbf
