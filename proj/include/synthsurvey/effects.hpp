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

// Treatment effects and Shapley decompositions of survey responses with
// respect to the conditioning components of the prompt.
//
// A "responder" maps a sample and a treatment vector to one numeric answer
// (or missing) per persona; it may be the live model behind a gateway, the
// offline mock, or any plain function. Aggregates are survey-weighted means
// over the personas that answered.

#ifndef SYNTHSURVEY_EFFECTS_HPP
#define SYNTHSURVEY_EFFECTS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "synthsurvey/answer_scale.hpp"
#include "synthsurvey/domain.hpp"
#include "synthsurvey/gateway.hpp"
#include "synthsurvey/runner.hpp"

namespace synthsurvey {

using Rational = boost::multiprecision::cpp_rational;
using MaybeValue = std::optional<double>;

class EffectsError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Responders
// ---------------------------------------------------------------------------

class Responder {
 public:
  virtual ~Responder() = default;
  /// One answer per persona, in sample order.
  virtual std::vector<MaybeValue> respond(const SurveySample& sample,
                                          const TreatmentVector& t) = 0;
};

using PersonaResponseFn =
    std::function<MaybeValue(const Persona&, const TreatmentVector&)>;

/// Evaluates a plain function persona by persona.
class FunctionResponder : public Responder {
 public:
  explicit FunctionResponder(PersonaResponseFn fn) : fn_(std::move(fn)) {}
  std::vector<MaybeValue> respond(const SurveySample& sample,
                                  const TreatmentVector& t) override;

 private:
  PersonaResponseFn fn_;
};

/// Runs the sample through a gateway. With draws > 1 every configuration is
/// asked `draws` times with different option orders and the non-missing
/// answers are averaged.
class GatewayResponder : public Responder {
 public:
  GatewayResponder(Gateway& gateway, ModelConfig config, SurveyQuestion question,
                   int draws = 1, SampleRunOptions options = {});

  std::vector<MaybeValue> respond(const SurveySample& sample,
                                  const TreatmentVector& t) override;

  const std::vector<PersonaFailure>& failures() const { return failures_; }

 private:
  Gateway& gateway_;
  ModelConfig config_;
  SurveyQuestion question_;
  int draws_;
  SampleRunOptions options_;
  std::vector<PersonaFailure> failures_;
};

/// Remembers answers per treatment configuration so each configuration is
/// asked once. Counts distinct configurations and total requests.
class MemoResponder : public Responder {
 public:
  explicit MemoResponder(Responder& inner) : inner_(inner) {}

  std::vector<MaybeValue> respond(const SurveySample& sample,
                                  const TreatmentVector& t) override;

  std::size_t distinct_configurations() const { return memo_.size(); }
  std::size_t requests() const { return requests_; }

 private:
  Responder& inner_;
  std::map<std::string, std::vector<MaybeValue>> memo_;
  std::size_t requests_ = 0;
};

// ---------------------------------------------------------------------------
// Treatment effects
// ---------------------------------------------------------------------------

struct EffectEstimate {
  enum class Kind { individual, average, naive, shapley };
  Kind kind = Kind::average;
  std::string name;
  double value = 0.0;  // percentage points
  std::size_t n_used = 0;
  std::string baseline;
};

/// g(t1; x) - g(t0; x), missing if either answer is missing.
MaybeValue individual_effect(const PersonaResponseFn& respond,
                             const Persona& persona, const TreatmentVector& t1,
                             const TreatmentVector& t0);

/// Per-persona effects for a whole sample.
std::vector<MaybeValue> individual_effects(Responder& responder,
                                           const SurveySample& sample,
                                           const TreatmentVector& t1,
                                           const TreatmentVector& t0);

/// Mean individual effect over personas with both answers present; survey
/// weighted when `weighted`. Throws EffectsError if no pair is usable.
EffectEstimate average_effect(Responder& responder, const SurveySample& sample,
                              const TreatmentVector& t1, const TreatmentVector& t0,
                              bool weighted = true);

/// Weighted mean over non-missing answers. Throws EffectsError if none.
double aggregate_response(std::span<const MaybeValue> answers,
                          const SurveySample& sample, bool weighted = true);

// ---------------------------------------------------------------------------
// Shapley values
// ---------------------------------------------------------------------------

/// |S|! (K - |S| - 1)! / K!  for a coalition S not containing the player.
/// Throws EffectsError unless K >= 1 and coalition_size <= K - 1.
Rational coalition_weight(std::size_t coalition_size, std::size_t players);

/// Shapley value of each player from the worth of every coalition; the
/// coalition with bitmask m is values[m] (bit k set = player k active).
/// Works for double and Rational worths.
template <typename T>
std::vector<T> shapley_from_coalition_values(std::span<const T> values,
                                             std::size_t players) {
  if (players == 0 || players > 30) {
    throw EffectsError("number of players must be in [1, 30]");
  }
  const std::size_t n_coalitions = std::size_t{1} << players;
  if (values.size() != n_coalitions) {
    throw EffectsError("expected 2^K coalition values");
  }
  std::vector<T> weights;
  weights.reserve(players);
  for (std::size_t s = 0; s < players; ++s) {
    const Rational w = coalition_weight(s, players);
    if constexpr (std::is_floating_point_v<T>) {
      weights.push_back(w.template convert_to<T>());
    } else {
      weights.push_back(T(w));
    }
  }
  std::vector<T> phi(players, T(0));
  for (std::size_t mask = 0; mask < n_coalitions; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t k = 0; k < players; ++k) {
      const std::size_t bit = std::size_t{1} << k;
      if (mask & bit) continue;
      phi[k] += weights[size] * (values[mask | bit] - values[mask]);
    }
  }
  return phi;
}

/// Treatment in which members of `coalition` (bitmask over players) take
/// their scenario values and everybody else the baseline values.
TreatmentVector coalition_treatment(const Scenario& scenario,
                                    const GroupingScheme& grouping,
                                    std::uint64_t coalition);

enum class DecompositionMode {
  aggregate,   // decompose the weighted-mean answer per configuration
  per_persona  // decompose each persona, then take the weighted mean
};

struct ShapleyOptions {
  DecompositionMode mode = DecompositionMode::aggregate;
  bool weighted = true;
  std::size_t max_players = 12;
};

struct ShapleyReport {
  std::vector<std::pair<std::string, double>> players;
  double baseline_value = 0.0;  // aggregate answer with every player at baseline
  double total_value = 0.0;     // aggregate answer with every player active
  std::size_t evaluation_count = 0;  // treatment configurations evaluated
  std::size_t n_used = 0;            // personas contributing
  DecompositionMode mode = DecompositionMode::aggregate;

  double sum_of_players() const;
  double value(std::string_view player) const;
};

/// Exact Shapley decomposition over all 2^K coalitions of the grouping's
/// players. Every configuration is requested once.
ShapleyReport shapley_decompose(Responder& responder, const SurveySample& sample,
                                const Scenario& scenario,
                                const GroupingScheme& grouping,
                                const ShapleyOptions& options = {});

/// Aggregate answer with only `player` at its scenario value minus the
/// aggregate answer with everything at baseline.
EffectEstimate naive_effect(Responder& responder, const SurveySample& sample,
                            const Scenario& scenario,
                            const GroupingScheme& grouping,
                            std::string_view player, bool weighted = true);

// ---------------------------------------------------------------------------
// Sensitivity scans
// ---------------------------------------------------------------------------

struct SensitivityCurve {
  std::string component;  // player name
  /// (x, aggregate answer - offset), sorted by x. For multi-component
  /// players x is the basket-weighted mean of the components.
  std::vector<std::pair<double, double>> grid;
  double offset = 0.0;  // aggregate answer with the player at zero
  TreatmentVector holding;  // values of the other components
};

struct ScanOptions {
  double min_input = -100.0;
  double max_input = 500.0;
  bool weighted = true;
};

/// Varies one player across `grid` (x-axis units) with the other components
/// at the scenario baseline. For players with several components the first
/// one leads and the rest follow at their scenario ratio to it.
SensitivityCurve sensitivity_scan(
    Responder& responder, const SurveySample& sample,
    const GroupingScheme::Player& player, std::span<const double> grid,
    const Scenario& scenario,
    const std::array<double, kComponentCount>& basket_shares =
        reference::basket_shares(),
    const ScanOptions& options = {});

/// Treatment at x-axis position `x` for a scan of `player`.
TreatmentVector scan_treatment(const GroupingScheme::Player& player, double x,
                               const Scenario& scenario,
                               const std::array<double, kComponentCount>& basket_shares);

struct SlopeRatio {
  double slope = 0.0;
  double ratio = 0.0;  // slope / basket weight; > 1 means over-reaction
  std::size_t n_points = 0;
};

/// Least-squares slope over curve points with x in [lo, hi].
SlopeRatio slope_and_ratio(const SensitivityCurve& curve, double lo, double hi,
                           double basket_weight);

}  // namespace synthsurvey

#endif  // SYNTHSURVEY_EFFECTS_HPP
