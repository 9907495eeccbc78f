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

#ifndef SYNTHSURVEY_PROMPTING_HPP
#define SYNTHSURVEY_PROMPTING_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "synthsurvey/answer_scale.hpp"
#include "synthsurvey/demographic_map.hpp"
#include "synthsurvey/domain.hpp"

namespace synthsurvey {

/// The fixed system prompt shared by every request.
inline constexpr std::string_view kSystemPrompt =
    "You are pretending to be the person described given your best guess as "
    "to their personal, social and economic situation.";

inline constexpr std::string_view kQuestionPreamble =
    "You are going to be asked questions about your perception of current and "
    "future inflation.";

inline constexpr std::string_view kClosingInstruction =
    "Please choose one option, no explanation.";

struct PromptBundle {
  std::string system_text;
  std::string user_text;
  std::vector<std::string> presented_options;
  std::uint64_t permutation_seed = 0;

  friend bool operator==(const PromptBundle&, const PromptBundle&) = default;
};

/// Renders a rate for the conditioning text: magnitudes above ten as a whole
/// number, everything else with exactly one decimal. Ties round to even and
/// a negative zero loses its sign.
std::string format_rate(double rate);

/// "You are <sex>, aged <age>, live in <region>, are <class> and <work> with
/// an <income>. You <education> and live in a <housing>."
std::string render_persona_sentence(
    const DemographicProfile& profile,
    const DemographicMap& wording = default_demographic_map());

/// Conditioning paragraph, or "" when no component is active.
std::string render_conditioning(const TreatmentVector& t);

/// Deterministic Fisher-Yates shuffle driven by `seed`.
std::vector<std::string> scramble_options(std::span<const std::string> labels,
                                          std::uint64_t seed);

/// Seed for one respondent's option order in one sample at one horizon.
std::uint64_t respondent_seed(std::uint64_t master_seed,
                              std::string_view persona_id, int horizon_years);

/// Lays out the user prompt for an explicit option order. Paragraphs are
/// separated by a single blank line; options are numbered from 1.
std::string render_user_prompt(const DemographicProfile& profile,
                               const TreatmentVector& t,
                               const SurveyQuestion& question,
                               std::span<const std::string> presented_options,
                               const DemographicMap& wording = default_demographic_map());

/// Full prompt with the options scrambled by `seed`.
PromptBundle build_prompt(const Persona& persona, const TreatmentVector& t,
                          const SurveyQuestion& question, std::uint64_t seed,
                          const DemographicMap& wording = default_demographic_map());

}  // namespace synthsurvey

#endif  // SYNTHSURVEY_PROMPTING_HPP
