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

#include "lfbf/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace lfbf {

using nlohmann::json;

std::string default_label(const Feedback& feedback) {
  return feedback.is_perfect() ? "perfect" : "rvq_b" + feedback.to_string();
}

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    parts.push_back(first == std::string::npos ? "" : item.substr(first, last - first + 1));
  }
  return parts;
}

}  // namespace

std::vector<CurveSpec> parse_curve_list(const std::string& text) {
  std::vector<CurveSpec> curves;
  for (const auto& item : split_commas(text)) {
    const Feedback fb = Feedback::parse(item);
    curves.push_back({default_label(fb), fb});
  }
  if (curves.empty()) throw ConfigError("curves: list is empty");
  return curves;
}

std::vector<double> parse_snr_list(const std::string& text) {
  std::vector<double> values;
  for (const auto& item : split_commas(text)) {
    double v = 0.0;
    const char* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(item.data(), end, v);
    if (item.empty() || ec != std::errc() || ptr != end)
      throw ConfigError("snr_db_points: '" + item + "' is not a number");
    values.push_back(v);
  }
  if (values.empty()) throw ConfigError("snr_db_points: list is empty");
  return values;
}

void apply_preset(SimConfig& config, const std::string& name) {
  if (name == "fig2-miso") {
    config.n_t = 2;
    config.n_r = 1;
    config.csi_mode = CsiMode::kPerfect;
  } else if (name == "fig3-mimo22") {
    config.n_t = 2;
    config.n_r = 2;
    config.csi_mode = CsiMode::kPerfect;
  } else if (name == "fig4-estimated") {
    config.n_t = 2;
    config.n_r = 1;
    config.csi_mode = CsiMode::kEstimated;
  } else {
    throw ConfigError("preset: unknown preset '" + name + "'");
  }
}

namespace {

template <typename T>
T get_unsigned(const json& value, const std::string& key) {
  if (!value.is_number_integer() ||
      (!value.is_number_unsigned() && value.get<std::int64_t>() < 0))
    throw ConfigError(key + ": expected a nonnegative integer");
  return static_cast<T>(value.get<std::uint64_t>());
}

double get_number(const json& value, const std::string& key) {
  if (!value.is_number()) throw ConfigError(key + ": expected a number");
  return value.get<double>();
}

std::string get_string(const json& value, const std::string& key) {
  if (!value.is_string()) throw ConfigError(key + ": expected a string");
  return value.get<std::string>();
}

Feedback get_feedback(const json& value, const std::string& key) {
  if (value.is_string()) {
    try {
      return Feedback::parse(value.get<std::string>());
    } catch (const ConfigError&) {
      throw ConfigError(key + ": expected 'perfect' or a nonnegative integer");
    }
  }
  return Feedback::bits(get_unsigned<unsigned>(value, key));
}

}  // namespace

void merge_json(ExperimentSetup& setup, const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: top level must be a JSON object");
  SimConfig& c = setup.config;
  for (const auto& [key, value] : doc.items()) {
    if (key == "n_t") {
      c.n_t = get_unsigned<std::size_t>(value, key);
    } else if (key == "n_r") {
      c.n_r = get_unsigned<std::size_t>(value, key);
    } else if (key == "n_subcarriers") {
      c.n_subcarriers = get_unsigned<std::size_t>(value, key);
    } else if (key == "n_taps") {
      c.n_taps = get_unsigned<std::size_t>(value, key);
    } else if (key == "feedback_bits") {
      c.feedback = get_feedback(value, key);
    } else if (key == "modulation") {
      c.modulation = modulation_from_string(get_string(value, key));
    } else if (key == "snr_db_points") {
      if (!value.is_array()) throw ConfigError(key + ": expected an array of numbers");
      std::vector<double> points;
      for (const auto& v : value) points.push_back(get_number(v, key));
      c.snr_db_points = std::move(points);
    } else if (key == "target_errors") {
      c.target_errors = get_unsigned<std::uint64_t>(value, key);
    } else if (key == "max_bits") {
      c.max_bits = get_unsigned<std::uint64_t>(value, key);
    } else if (key == "csi_mode") {
      const std::string mode = get_string(value, key);
      if (mode == "perfect") c.csi_mode = CsiMode::kPerfect;
      else if (mode == "estimated") c.csi_mode = CsiMode::kEstimated;
      else throw ConfigError(key + ": expected 'perfect' or 'estimated'");
    } else if (key == "n_pilots") {
      c.n_pilots = get_unsigned<std::size_t>(value, key);
    } else if (key == "pilot_snr_db") {
      if (value.is_null()) c.pilot_snr_db.reset();
      else c.pilot_snr_db = get_number(value, key);
    } else if (key == "codebook_mode") {
      const std::string mode = get_string(value, key);
      if (mode == "fresh") c.codebook_mode = CodebookMode::kFresh;
      else if (mode == "fixed") c.codebook_mode = CodebookMode::kFixed;
      else throw ConfigError(key + ": expected 'fresh' or 'fixed'");
    } else if (key == "master_seed") {
      c.master_seed = get_unsigned<std::uint64_t>(value, key);
    } else if (key == "curves") {
      if (!value.is_array()) throw ConfigError(key + ": expected an array");
      std::vector<CurveSpec> curves;
      for (const auto& item : value) {
        if (!item.is_object() || !item.contains("feedback_bits"))
          throw ConfigError(key + ": entries need a feedback_bits field");
        CurveSpec spec;
        spec.feedback = get_feedback(item.at("feedback_bits"), key + ".feedback_bits");
        spec.label = item.contains("label") ? get_string(item.at("label"), key + ".label")
                                            : default_label(spec.feedback);
        curves.push_back(std::move(spec));
      }
      setup.curves = std::move(curves);
    } else {
      throw ConfigError(key + ": unknown key");
    }
  }
}

json to_json(const SimConfig& c) {
  json doc;
  doc["n_t"] = c.n_t;
  doc["n_r"] = c.n_r;
  doc["n_subcarriers"] = c.n_subcarriers;
  doc["n_taps"] = c.n_taps;
  if (c.feedback.is_perfect()) doc["feedback_bits"] = "perfect";
  else doc["feedback_bits"] = c.feedback.bit_count();
  doc["modulation"] = to_string(c.modulation);
  doc["snr_db_points"] = c.snr_db_points;
  doc["target_errors"] = c.target_errors;
  doc["max_bits"] = c.max_bits;
  doc["csi_mode"] = to_string(c.csi_mode);
  doc["n_pilots"] = c.n_pilots;
  doc["pilot_snr_db"] = c.pilot_snr_db ? json(*c.pilot_snr_db) : json(nullptr);
  doc["codebook_mode"] = to_string(c.codebook_mode);
  doc["master_seed"] = c.master_seed;
  return doc;
}

json manifest_json(const ExperimentSetup& setup) {
  json doc = to_json(setup.config);
  json curves = json::array();
  for (const auto& spec : setup.curves) {
    json item;
    item["label"] = spec.label;
    if (spec.feedback.is_perfect()) item["feedback_bits"] = "perfect";
    else item["feedback_bits"] = spec.feedback.bit_count();
    curves.push_back(std::move(item));
  }
  doc["curves"] = std::move(curves);
  return doc;
}

std::vector<CurveSpec> default_curves(const SimConfig& config) {
  std::vector<CurveSpec> curves = {{"perfect", Feedback::perfect()}};
  if (!config.feedback.is_perfect())
    curves.push_back({default_label(config.feedback), config.feedback});
  return curves;
}

ExperimentSetup parse_setup(const ConfigSources& sources) {
  ExperimentSetup setup;
  if (sources.config_path) {
    std::ifstream in(*sources.config_path);
    if (!in) throw ConfigError("config: cannot open " + sources.config_path->string());
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError("config: " + sources.config_path->string() + ": " + e.what());
    }
    merge_json(setup, doc);
  }
  SimConfig& c = setup.config;
  if (sources.preset) apply_preset(c, *sources.preset);
  if (sources.feedback) c.feedback = *sources.feedback;
  if (sources.snr_db_points) c.snr_db_points = *sources.snr_db_points;
  if (sources.seed) c.master_seed = *sources.seed;
  if (sources.modulation) c.modulation = *sources.modulation;
  if (sources.pilots) c.n_pilots = *sources.pilots;
  if (sources.pilot_snr_db) c.pilot_snr_db = *sources.pilot_snr_db;
  if (sources.target_errors) c.target_errors = *sources.target_errors;
  if (sources.max_bits) c.max_bits = *sources.max_bits;
  if (sources.curves) setup.curves = *sources.curves;
  if (setup.curves.empty()) setup.curves = default_curves(c);
  validate(c);
  for (std::size_t i = 0; i < setup.curves.size(); ++i)
    for (std::size_t j = i + 1; j < setup.curves.size(); ++j)
      if (setup.curves[i].label == setup.curves[j].label)
        throw ConfigError("curves: duplicate label '" + setup.curves[i].label + "'");
  for (const auto& spec : setup.curves) {
    SimConfig probe = c;
    probe.feedback = spec.feedback;
    validate(probe);
    if (spec.label.empty() || spec.label.find_first_of("/\\") != std::string::npos)
      throw ConfigError("curves: label '" + spec.label + "' is not a valid file stem");
  }
  return setup;
}

SimConfig parse_config(const ConfigSources& sources) { return parse_setup(sources).config; }

}  // namespace lfbf
