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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "lfbf/config.hpp"
#include "lfbf/simulator.hpp"

namespace lfbf {

/// SNR (dB) where the curve crosses `target_ber`, by linear interpolation of
/// log10(BER) against SNR between the first bracketing pair of points.
/// Empty when the curve never crosses the target.
std::optional<double> snr_at_ber(const BerCurve& curve, double target_ber = 1e-3);

struct ExperimentResult {
  std::vector<BerCurve> curves;
  /// Per curve: SNR gap to the perfect-feedback curve at BER 1e-3, when both
  /// cross it and a perfect curve exists.
  std::vector<std::optional<double>> gap_db;
};

/// Sweeps every curve, writes `<label>.csv` per curve plus `manifest.json`
/// into `out_dir`, and prints a summary table to `log`.
ExperimentResult run_experiment(const ExperimentSetup& setup, const std::filesystem::path& out_dir,
                                const SweepOptions& options, std::ostream& log);

/// Computes gaps of each curve to the first perfect-feedback curve.
std::vector<std::optional<double>> gaps_to_perfect(const std::vector<BerCurve>& curves,
                                                   double target_ber = 1e-3);

void print_summary(std::ostream& log, const ExperimentResult& result);

}  // namespace lfbf
