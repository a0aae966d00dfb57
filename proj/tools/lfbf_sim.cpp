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

// Command-line front-end for the limited-feedback beamforming simulator.
//
//   lfbf_sim --preset fig2-miso --curves perfect,1,4,8 --out-dir out/
//   lfbf_sim codebook --dim 2 --bits 4 --seed 7 --out cb.bin

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "lfbf/codebook.hpp"
#include "lfbf/config.hpp"
#include "lfbf/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo BER simulator for MIMO-OFDM joint beamforming with limited feedback"};

  std::optional<std::string> preset;
  std::optional<std::string> config_path;
  std::string out_dir = "lfbf_out";
  std::optional<std::string> feedback_bits;
  std::optional<std::string> snr;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::optional<std::string> modulation;
  std::optional<std::size_t> pilots;
  std::optional<double> pilot_snr;
  std::optional<std::string> curves;
  std::optional<std::uint64_t> target_errors;
  std::optional<std::uint64_t> max_bits;

  app.add_option("--preset", preset, "Scenario preset")
      ->check(CLI::IsMember(lfbf::preset_names()));
  app.add_option("--config", config_path, "JSON config (flat SimConfig keys)");
  app.add_option("--out-dir", out_dir, "Directory for CSV curves and manifest.json");
  app.add_option("--feedback-bits", feedback_bits, "Feedback bits B, or 'perfect'");
  app.add_option("--snr", snr, "Comma-separated SNR points in dB, strictly increasing");
  app.add_option("--seed", seed, "Master seed");
  app.add_option("--threads", threads, "Worker threads (0 = auto)");
  app.add_option("--modulation", modulation, "bpsk or qpsk");
  app.add_option("--pilots", pilots, "Training length per subcarrier (estimated CSI)");
  app.add_option("--pilot-snr", pilot_snr, "Pilot SNR in dB (default: data SNR)");
  app.add_option("--curves", curves, "Comma-separated curve list, e.g. perfect,1,4,8");
  app.add_option("--target-errors", target_errors, "Bit errors to collect per SNR point");
  app.add_option("--max-bits", max_bits, "Bit budget per SNR point");

  auto* cb_cmd = app.add_subcommand("codebook", "Generate an RVQ codebook file");
  std::size_t cb_dim = 2;
  unsigned cb_bits = 4;
  std::uint32_t cb_seed = 1;
  std::string cb_out;
  cb_cmd->add_option("--dim", cb_dim, "Vector dimension")->check(CLI::PositiveNumber);
  cb_cmd->add_option("--bits", cb_bits, "Feedback bits");
  cb_cmd->add_option("--seed", cb_seed, "Generation seed");
  cb_cmd->add_option("--out", cb_out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (*cb_cmd) {
    try {
      lfbf::save_codebook(cb_out, lfbf::gen_rvq(cb_dim, cb_bits, cb_seed));
      return kExitOk;
    } catch (const lfbf::CodebookTooLarge& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return kExitConfig;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitRuntime;
    }
  }

  lfbf::ExperimentSetup setup;
  try {
    lfbf::ConfigSources sources;
    if (config_path) sources.config_path = *config_path;
    sources.preset = preset;
    if (feedback_bits) sources.feedback = lfbf::Feedback::parse(*feedback_bits);
    if (snr) sources.snr_db_points = lfbf::parse_snr_list(*snr);
    sources.seed = seed;
    if (modulation) sources.modulation = lfbf::modulation_from_string(*modulation);
    sources.pilots = pilots;
    sources.pilot_snr_db = pilot_snr;
    sources.target_errors = target_errors;
    sources.max_bits = max_bits;
    if (curves) sources.curves = lfbf::parse_curve_list(*curves);
    setup = lfbf::parse_setup(sources);
  } catch (const lfbf::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    lfbf::run_experiment(setup, out_dir, {threads}, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}
