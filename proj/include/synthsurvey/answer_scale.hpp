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

#ifndef SYNTHSURVEY_ANSWER_SCALE_HPP
#define SYNTHSURVEY_ANSWER_SCALE_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synthsurvey/domain.hpp"

namespace synthsurvey {

class UnknownOptionError : public Error {
 public:
  explicit UnknownOptionError(std::string label);
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

/// One categorical answer. A closed bin [low, high] maps to its midpoint, a
/// bin open at the top maps to low + 0.5, one open at the bottom to
/// high - 0.5. "Don't know" style options carry no bounds and map to missing.
struct AnswerOption {
  std::string label;
  std::optional<double> low;
  std::optional<double> high;

  bool is_missing() const { return !low && !high; }
  std::optional<double> value() const;
};

class AnswerScale {
 public:
  /// Throws Error on empty scales, duplicate labels, or non-missing values
  /// that are not strictly increasing in option order.
  explicit AnswerScale(std::vector<AnswerOption> options);

  const std::vector<AnswerOption>& options() const { return options_; }
  std::size_t size() const { return options_.size(); }
  std::vector<std::string> labels() const;

  std::optional<std::size_t> find(std::string_view label) const;

  /// Non-missing option whose value is nearest to `x`; ties go to the lower
  /// value.
  const AnswerOption& nearest(double x) const;

  friend bool operator==(const AnswerScale& a, const AnswerScale& b);

 private:
  std::vector<AnswerOption> options_;
};

/// Numeric value of `label`, or nullopt for options that map to missing.
/// Throws UnknownOptionError if the label is not part of the scale.
std::optional<double> map_option_to_value(std::string_view label,
                                          const AnswerScale& scale);

/// The perception/expectation scale used by default: "gone down by more than
/// 2%" ... "not changed" ... one-point bins up to "risen by 14-15%", "risen by
/// more than 15%", then "no idea".
const AnswerScale& default_answer_scale();

/// Scale files hold one option per line: `label,low,high` with an empty field
/// for an open side, or `label,missing`. Lines starting with '#' are ignored.
AnswerScale parse_answer_scale(std::string_view text);
AnswerScale load_answer_scale(const std::filesystem::path& path);
std::string format_answer_scale(const AnswerScale& scale);

struct SurveyQuestion {
  int horizon_years = 0;  // 0 = perceptions over the last 12 months
  std::string wording;
  AnswerScale scale = default_answer_scale();
};

/// Default wording for horizons {0, 1, 2, 5}. Only the horizon-0 wording is
/// known verbatim; the expectation wordings are editable templates.
SurveyQuestion default_question(int horizon_years);

}  // namespace synthsurvey

#endif  // SYNTHSURVEY_ANSWER_SCALE_HPP
