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

#ifndef SYNTHSURVEY_RUNNER_HPP
#define SYNTHSURVEY_RUNNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "synthsurvey/answer_scale.hpp"
#include "synthsurvey/domain.hpp"
#include "synthsurvey/gateway.hpp"

namespace synthsurvey {

struct SampleRunOptions {
  /// Abort on the first failing persona instead of recording it.
  bool fail_fast = false;
  /// Mixed into every respondent seed; lets callers draw independent option
  /// orders for repeated runs of the same sample.
  std::uint64_t seed_salt = 0;
};

struct PersonaFailure {
  std::string persona_id;
  std::string message;
};

struct SampleRun {
  /// One record per persona, in sample order. Failed personas have a
  /// missing value and an entry in `failures`.
  std::vector<ResponseRecord> records;
  std::vector<PersonaFailure> failures;

  std::vector<std::optional<double>> values() const;
  std::size_t n_missing() const;
};

/// Builds every persona's prompt, dispatches up to max_concurrency requests
/// at once and parses the replies. Output order never depends on completion
/// order.
SampleRun run_sample(Gateway& gateway, const ModelConfig& config,
                     const SurveySample& sample, const TreatmentVector& t,
                     const SurveyQuestion& question,
                     const SampleRunOptions& options = {});

}  // namespace synthsurvey

#endif  // SYNTHSURVEY_RUNNER_HPP
