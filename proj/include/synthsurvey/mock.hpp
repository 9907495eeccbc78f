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

#ifndef SYNTHSURVEY_MOCK_HPP
#define SYNTHSURVEY_MOCK_HPP

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "synthsurvey/answer_scale.hpp"
#include "synthsurvey/domain.hpp"
#include "synthsurvey/gateway.hpp"

namespace synthsurvey {

/// Coefficients of the offline respondent. Its latent answer is
///
///   intercept(h) + model_offset + sum_k slope_k * t_k  (active k only)
///     + interaction * t_food * t_energy               (both active)
///     + sum of matching demographic offsets
///     + idiosyncratic(persona) + noise_sd_per_temperature * T * z(seed)
///
/// where idiosyncratic(persona) is uniform on [-spread/2, spread/2) from a
/// hash of the persona id and z is a standard normal draw from the seed.
/// The reply is the label of the scale option nearest to the latent value.
struct MockCoefficients {
  double intercept = 0.0;
  std::map<int, double> horizon_intercepts;  // overrides intercept per horizon
  std::array<double, kComponentCount> slopes{};
  double food_energy_interaction = 0.0;
  /// Keys "category:class", e.g. "income:<9999".
  std::map<std::string, double> demographic_offsets;
  double idiosyncratic_spread = 0.0;
  double noise_sd_per_temperature = 0.0;
  std::map<std::string, double> model_offsets;
  /// Personas whose requests always fail (for exercising error paths).
  std::set<std::string> failing_personas;
  /// Simulated request latency drawn uniformly from [0, max_latency_ms].
  int max_latency_ms = 0;

  /// Slopes equal to the basket shares; everything else zero.
  static MockCoefficients basket_shares();
};

struct MockInput {
  std::string_view persona_id;
  const DemographicProfile* profile = nullptr;
  TreatmentVector treatment;
  int horizon_years = 0;
  std::string_view model_id;
  double temperature = 0.0;
  std::uint64_t seed = 0;
};

class MockRespondent {
 public:
  explicit MockRespondent(MockCoefficients coefficients,
                          AnswerScale scale = default_answer_scale());

  const MockCoefficients& coefficients() const { return coefficients_; }
  const AnswerScale& scale() const { return scale_; }

  /// Latent answer before snapping.
  double latent(const MockInput& input) const;
  /// Scale value the latent answer snaps to.
  double snapped(const MockInput& input) const;
  /// Reply text: the label of the snapped option.
  std::string reply(const MockInput& input) const;

  /// The latent's treatment part, sum_k slope_k t_k + interaction term.
  double treatment_term(const TreatmentVector& t) const;

  /// Standard normal draw for a seed (Box-Muller on a seeded 64-bit engine).
  static double standard_normal(std::uint64_t seed);
  /// Uniform draw on [0, 1) for a seed.
  static double unit_uniform(std::uint64_t seed);

 private:
  MockCoefficients coefficients_;
  AnswerScale scale_;
};

/// Offline backend answering from request context. Requests without a
/// persona (knowledge probes) get a fixed deterministic refusal-style reply.
class MockChatBackend : public ChatBackend {
 public:
  explicit MockChatBackend(MockRespondent respondent);

  Result attempt(const ChatRequest& request, const ModelConfig& config,
                 const RequestContext& context) override;

  const MockRespondent& respondent() const { return respondent_; }

 private:
  MockRespondent respondent_;
};

}  // namespace synthsurvey

#endif  // SYNTHSURVEY_MOCK_HPP
