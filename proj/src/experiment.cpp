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

#include "lfbf/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace lfbf {

std::optional<double> snr_at_ber(const BerCurve& curve, double target_ber) {
  const auto& pts = curve.points;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const BerPoint& a = pts[i];
    const BerPoint& b = pts[i + 1];
    if (a.ber <= 0.0 || b.ber <= 0.0) continue;
    if (a.ber >= target_ber && b.ber <= target_ber) {
      const double la = std::log10(a.ber);
      const double lb = std::log10(b.ber);
      if (la == lb) return a.snr_db;
      const double t = (la - std::log10(target_ber)) / (la - lb);
      return a.snr_db + t * (b.snr_db - a.snr_db);
    }
  }
  return std::nullopt;
}

std::vector<std::optional<double>> gaps_to_perfect(const std::vector<BerCurve>& curves,
                                                   double target_ber) {
  std::vector<std::optional<double>> gaps(curves.size());
  const BerCurve* reference = nullptr;
  for (const auto& c : curves)
    if (c.config.feedback.is_perfect()) {
      reference = &c;
      break;
    }
  if (reference == nullptr) return gaps;
  const auto ref_snr = snr_at_ber(*reference, target_ber);
  if (!ref_snr) return gaps;
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (const auto snr = snr_at_ber(curves[i], target_ber)) gaps[i] = *snr - *ref_snr;
  return gaps;
}

void print_summary(std::ostream& log, const ExperimentResult& result) {
  char cell[64];
  log << "snr_db";
  for (const auto& c : result.curves) {
    std::snprintf(cell, sizeof cell, " %14s", c.label.c_str());
    log << cell;
  }
  log << '\n';
  if (result.curves.empty()) return;
  const auto& first = result.curves.front().points;
  for (std::size_t i = 0; i < first.size(); ++i) {
    std::snprintf(cell, sizeof cell, "%6.2f", first[i].snr_db);
    log << cell;
    for (const auto& c : result.curves) {
      const BerPoint& p = c.points[i];
      std::snprintf(cell, sizeof cell, " %13.3e%c", p.ber, p.converged ? ' ' : '*');
      log << cell;
    }
    log << '\n';
  }
  log << "gap@1e-3";
  for (const auto& gap : result.gap_db) {
    if (gap) std::snprintf(cell, sizeof cell, " %11.2f dB", *gap);
    else std::snprintf(cell, sizeof cell, " %14s", "n/a");
    log << cell;
  }
  log << "\n(* = stopped on max_bits before reaching target_errors)\n";
}

ExperimentResult run_experiment(const ExperimentSetup& setup, const std::filesystem::path& out_dir,
                                const SweepOptions& options, std::ostream& log) {
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream manifest(out_dir / "manifest.json");
    if (!manifest) throw Error("cannot write " + (out_dir / "manifest.json").string());
    manifest << manifest_json(setup).dump(2) << '\n';
  }

  ExperimentResult result;
  for (const auto& spec : setup.curves) {
    SimConfig config = setup.config;
    config.feedback = spec.feedback;
    BerCurve curve = run_sweep(config, spec.label, options);
    const auto path = out_dir / (spec.label + ".csv");
    std::ofstream csv(path);
    if (!csv) throw Error("cannot write " + path.string());
    write_curve_csv(csv, curve);
    if (!csv) throw Error("failed writing " + path.string());
    result.curves.push_back(std::move(curve));
  }
  result.gap_db = gaps_to_perfect(result.curves);
  print_summary(log, result);
  return result;
}

}  // namespace lfbf
