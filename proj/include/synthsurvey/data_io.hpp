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

// Readers and writers for the plain-text inputs: price-index component
// series, survey microdata, group-level inflation estimates and aggregate
// survey panels. Column layouts are documented in docs/file-formats.md.

#ifndef SYNTHSURVEY_DATA_IO_HPP
#define SYNTHSURVEY_DATA_IO_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "synthsurvey/answer_scale.hpp"
#include "synthsurvey/demographic_map.hpp"
#include "synthsurvey/domain.hpp"
#include "synthsurvey/regression.hpp"
#include "synthsurvey/stats.hpp"

namespace synthsurvey {

/// Raised for malformed input; `line` is 1-based, 0 when not line-specific.
class DataError : public Error {
 public:
  DataError(const std::string& what, std::size_t line = 0);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// ---------------------------------------------------------------------------
// Component series
// ---------------------------------------------------------------------------

struct ComponentSeries {
  std::string component;  // food, restaurants, energy, other, headline
  std::vector<std::pair<YearMonth, double>> observations;  // strictly increasing

  std::optional<double> at(YearMonth month) const;
};

using SeriesSet = std::map<std::string, ComponentSeries>;

/// Columns `date,component,yoy`, date as YYYY-MM. Rows may come in any
/// order. Duplicate months are fatal.
SeriesSet parse_component_series(std::string_view text);
SeriesSet load_component_series(const std::filesystem::path& path);

/// Mean of the three monthly values before `survey_month`.
double three_month_avg(const ComponentSeries& series, YearMonth survey_month);

/// Inclusive window; an empty start means "from the first observation".
struct MonthWindow {
  std::optional<YearMonth> start;
  YearMonth end{2021, 9};
};

std::vector<double> window_values(const ComponentSeries& series,
                                  const MonthWindow& window);
double window_mean(const ComponentSeries& series, const MonthWindow& window);

/// Treatment = three-month averages of food, restaurants, energy and other
/// before the survey month; baseline = their means over `baseline_window`.
Scenario build_scenario(const SeriesSet& series, YearMonth survey_month,
                        std::string name, const MonthWindow& baseline_window = {});

// ---------------------------------------------------------------------------
// Microdata
// ---------------------------------------------------------------------------

inline constexpr std::array<int, 4> kDefaultHorizons = {0, 1, 2, 5};

struct RowError {
  std::size_t line = 0;
  std::string message;
};

struct Microdata {
  SurveySample sample;
  /// Benchmark answers per horizon, aligned with sample.personas.
  std::map<int, std::vector<MaybeValue>> responses;
  std::vector<RowError> errors;  // rows that were skipped
};

struct MicrodataOptions {
  PensionerRule pensioner;
  bool impute_pensioner = true;
  std::string label;
  std::uint64_t master_seed = 0;
};

/// Header `id,weight,sex,age,region,social_class,work,income,education,
/// housing` followed by `resp_h<horizon>` columns holding 1-based answer
/// positions in `scale` (blank or NaN = no answer). Rows with unmapped codes
/// are reported and skipped; a missing id or weight column throws.
Microdata parse_microdata(std::string_view text, const DemographicMap& map,
                          const AnswerScale& scale,
                          const MicrodataOptions& options = {});
Microdata load_microdata(const std::filesystem::path& path,
                         const DemographicMap& map, const AnswerScale& scale,
                         const MicrodataOptions& options = {});

/// Writes `data` back in the layout parse_microdata reads.
std::string format_microdata(const Microdata& data, const DemographicMap& map,
                             const AnswerScale& scale);

/// Class probabilities per category and a simple answer model for the
/// synthetic benchmark responses.
struct Marginals {
  /// Class weights per category (need not sum to one). Categories not set
  /// are uniform over their classes. Pensioner is never drawn; it is imputed
  /// for respondents of pensionable age who are not working.
  std::map<Category, std::vector<double>> class_weights;
  std::map<int, double> response_mean{{0, 8.5}, {1, 5.5}, {2, 4.0}, {5, 3.8}};
  double response_sd = 4.5;
  /// Shifts added to the latent answer, keyed "category:class".
  std::map<std::string, double> response_offsets;
  double missing_rate = 0.02;
  double weight_log_sd = 0.3;

  static Marginals uniform();
  /// Throws Error on negative weights, wrong lengths or all-zero rows.
  void validate() const;
};

/// Deterministic synthetic sample in the microdata layout.
std::string synth_microdata(std::size_t n, std::uint64_t seed,
                            const Marginals& marginals,
                            const DemographicMap& map = default_demographic_map(),
                            const AnswerScale& scale = default_answer_scale(),
                            const PensionerRule& pensioner = {});

// ---------------------------------------------------------------------------
// Group estimates and aggregate panels
// ---------------------------------------------------------------------------

/// Columns `category,ons_group,value` plus an optional `# period: ...`
/// comment. Each survey class gets the fraction-weighted mean of the
/// official groups mapped onto it. Missing groups throw; groups whose
/// fractions do not sum to one are reported in `warnings`.
GroupEstimateTable parse_group_estimates(std::string_view text,
                                         const DemographicMap& map);
GroupEstimateTable load_group_estimates(const std::filesystem::path& path,
                                        const DemographicMap& map);

/// Columns `quarter,survey_mean,<regressor>...`.
AggregatePanel parse_aggregate_panel(std::string_view text);
AggregatePanel load_aggregate_panel(const std::filesystem::path& path);

}  // namespace synthsurvey

#endif  // SYNTHSURVEY_DATA_IO_HPP
