// Copyright 2026 The synthsurvey Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Experiment configuration read from a JSON file. Relative paths are
// resolved against the directory holding the file.

#ifndef SYNTHSURVEY_CONFIG_HPP
#define SYNTHSURVEY_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "synthsurvey/data_io.hpp"
#include "synthsurvey/domain.hpp"
#include "synthsurvey/effects.hpp"
#include "synthsurvey/gateway.hpp"
#include "synthsurvey/mock.hpp"
#include "synthsurvey/regression.hpp"

namespace synthsurvey {

struct SampleSource {
  /// Microdata file in the survey schema; empty when synthetic.
  std::filesystem::path microdata;
  /// Generate the sample in memory instead of reading a file.
  std::optional<std::size_t> synthetic_n;
  std::uint64_t synthetic_seed = 1;
  Marginals marginals;
  std::string label;
  std::uint64_t master_seed = 0;
  /// Keep only the first `limit` personas.
  std::optional<std::size_t> limit;
  bool impute_pensioner = true;
};

struct ScenarioSource {
  /// "main" or "cross-validation" for the built-in scenarios; empty when
  /// the scenario is built from `series`.
  std::string reference = "main";
  std::filesystem::path series;
  std::optional<YearMonth> survey_month;
  MonthWindow baseline_window;
};

struct GridSpec {
  double from = 0.0;
  double to = 0.0;
  double step = 1.0;
  std::vector<double> values() const;
};

struct ScanConfig {
  std::map<std::string, GridSpec> grids;  // by player name
  std::map<std::string, std::pair<double, double>> linear_range;
  double band_low_quantile = 0.05;
  double band_high_quantile = 0.95;
  int horizon = 0;
  int draws = 1;  // option orders averaged per configuration
};

struct FitRange {
  Quarter from;
  Quarter to;
  std::string label;  // e.g. "2011Q2 - 2021Q2"
};

struct DecomposeConfig {
  std::vector<std::string> baselines{"zero", "historical"};
  DecompositionMode mode = DecompositionMode::aggregate;
  std::filesystem::path panel;
  std::vector<FitRange> fit_ranges;
  int horizon = 0;
  int draws = 1;
};

struct RegressConfig {
  std::filesystem::path group_estimates;
  std::vector<double> temperatures{0.0};
  int horizon = 0;
  RobustSe se = RobustSe::hc1;
  double alpha = 0.05;
};

struct ProbeConfig {
  std::filesystem::path prompts;
  std::vector<std::string> model_ids;
  std::size_t trend_sample = 200;
  int permutations = 9;
};

struct ExperimentConfig {
  std::string name = "experiment";
  std::filesystem::path base_dir = ".";

  SampleSource sample;
  ScenarioSource scenario;
  std::vector<int> horizons{0, 1, 2, 5};
  /// Include the conditioning paragraph in calibrate, run and regress.
  bool conditioned = true;
  ModelConfig model;
  std::vector<double> temperatures{0.0};
  int calibrate_horizon = 0;
  GroupingScheme grouping = GroupingScheme::food_rest_energy_other();
  HypothesisSpec hypothesis = HypothesisSpec::default_spec();
  MockCoefficients mock;
  std::filesystem::path out_dir = "out";
  bool svg = false;

  ScanConfig scan;
  DecomposeConfig decompose;
  RegressConfig regress;
  ProbeConfig probe;

  /// Parses a JSON document; throws Error naming the offending key.
  static ExperimentConfig parse(std::string_view json_text,
                                const std::filesystem::path& base_dir = ".");
  static ExperimentConfig load(const std::filesystem::path& path);

  /// Throws Error if a referenced file is missing or a temperature exceeds
  /// the model's cap.
  void validate() const;

  std::filesystem::path resolve(const std::filesystem::path& p) const;
};

/// Parses the mock coefficient block of a config; exposed for tests.
MockCoefficients parse_mock_coefficients(std::string_view json_text);

}  // namespace synthsurvey

#endif  // SYNTHSURVEY_CONFIG_HPP
