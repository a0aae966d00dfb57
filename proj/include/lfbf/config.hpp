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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfbf/simulator.hpp"

namespace lfbf {

/// One BER curve of an experiment.
struct CurveSpec {
  std::string label;
  Feedback feedback = Feedback::perfect();

  bool operator==(const CurveSpec&) const = default;
};

/// "perfect" for unlimited feedback, "rvq_b<B>" otherwise.
std::string default_label(const Feedback& feedback);

/// Parses "perfect,1,4,8".
std::vector<CurveSpec> parse_curve_list(const std::string& text);

/// Parses "0,5,10". Order is validated later with the rest of the config.
std::vector<double> parse_snr_list(const std::string& text);

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig2-miso", "fig3-mimo22", "fig4-estimated"};
  return names;
}

/// Applies the antenna/CSI overrides of a named scenario. Throws ConfigError
/// for an unknown name.
void apply_preset(SimConfig& config, const std::string& name);

/// Everything a run needs: the simulation config plus the curves to sweep.
struct ExperimentSetup {
  SimConfig config;
  std::vector<CurveSpec> curves;
};

/// Values gathered from command-line flags; set fields win over the file.
struct ConfigSources {
  std::optional<std::filesystem::path> config_path;
  std::optional<std::string> preset;
  std::optional<Feedback> feedback;
  std::optional<std::vector<double>> snr_db_points;
  std::optional<std::uint64_t> seed;
  std::optional<Modulation> modulation;
  std::optional<std::size_t> pilots;
  std::optional<double> pilot_snr_db;
  std::optional<std::uint64_t> target_errors;
  std::optional<std::uint64_t> max_bits;
  std::optional<std::vector<CurveSpec>> curves;
};

/// Flat-key JSON object mirroring SimConfig (plus optional "curves").
/// Unknown keys and ill-typed values raise ConfigError naming the key.
void merge_json(ExperimentSetup& setup, const nlohmann::json& doc);

nlohmann::json to_json(const SimConfig& config);
/// Manifest document: the config keys plus "curves"; loadable by parse_setup.
nlohmann::json manifest_json(const ExperimentSetup& setup);

/// Resolution order: defaults, config file, preset, flags. Validates the result.
ExperimentSetup parse_setup(const ConfigSources& sources);
SimConfig parse_config(const ConfigSources& sources);

/// Default curves when none are requested: perfect CSI and the configured B.
std::vector<CurveSpec> default_curves(const SimConfig& config);

}  // namespace lfbf
