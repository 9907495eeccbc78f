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

// Weighted least squares on demographic dummies, with heteroskedasticity
// robust standard errors, and the hypothesis bookkeeping around it.

#ifndef SYNTHSURVEY_REGRESSION_HPP
#define SYNTHSURVEY_REGRESSION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "synthsurvey/domain.hpp"
#include "synthsurvey/stats.hpp"

namespace synthsurvey {

inline constexpr std::string_view kInterceptName = "constant";

/// Which classes enter the regression, which one is the base of each
/// category, and the sign each non-base coefficient is expected to have.
struct HypothesisSpec {
  struct CategorySpec {
    Category category = Category::income;
    std::size_t base_class = 0;
    std::vector<std::size_t> classes;      // non-base classes, column order
    std::map<std::size_t, int> expected_sign;  // -1 or +1; default -1
  };
  std::vector<CategorySpec> categories;

  /// Bases: council house, <£9999, 16-24, working class, GCSE, Scotland;
  /// every other listed class is expected below its base.
  static HypothesisSpec default_spec();

  /// Throws Error on bases or classes outside the category, duplicates, or
  /// signs other than +-1.
  void validate() const;

  int expected_sign(Category category, std::size_t class_index) const;
};

/// Column name of a dummy, "category:class", e.g. "income:20000-34999".
std::string dummy_name(Category category, std::size_t class_index);

struct DesignMatrix {
  Eigen::MatrixXd X;                     // intercept first
  std::vector<std::string> columns;
  std::vector<std::size_t> persona_rows;  // sample index of each row
  std::vector<std::string> warnings;
};

/// Intercept plus one 0/1 column per non-base class. Personas whose class in
/// a listed category is neither the base nor listed are left out; all-zero
/// columns are dropped with a warning.
DesignMatrix build_dummy_design(const SurveySample& sample,
                                const HypothesisSpec& spec);

enum class RobustSe { hc0, hc1 };
enum class Stars { none, one, two, three };

/// "***" below 0.01, "**" below 0.05, "*" below 0.10.
Stars stars_for(double p_value);
std::string_view stars_text(Stars stars);

struct RegressionResult {
  std::vector<std::string> names;  // includes the intercept
  Eigen::VectorXd coefficients;
  Eigen::VectorXd robust_se;
  Eigen::VectorXd t_stats;
  Eigen::VectorXd p_values;  // two-sided, t with n - k df
  std::vector<Stars> stars;
  double r2 = 0.0;
  double r2_adj = 0.0;
  std::size_t n_obs = 0;
  std::size_t df_resid = 0;
  RobustSe se_kind = RobustSe::hc1;

  std::optional<std::size_t> index_of(std::string_view name) const;
  double coefficient(std::string_view name) const;
  /// Coefficients other than the intercept, by name.
  std::map<std::string, double> slopes() const;
};

class RegressionError : public Error {
 public:
  using Error::Error;
};

/// beta = (X'WX)^-1 X'Wy over rows with a value. Sandwich covariance
/// (X'WX)^-1 X'W diag(e^2) W X (X'WX)^-1, scaled by n/(n-k) for HC1.
/// Adjusted R^2 uses weighted sums of squares about the weighted mean.
/// Throws RegressionError on rank deficiency or n <= k.
RegressionResult wls_fit(std::span<const MaybeValue> y, const Eigen::MatrixXd& X,
                         std::span<const double> weights,
                         std::vector<std::string> names,
                         RobustSe se = RobustSe::hc1);

/// Convenience: wls_fit on a design built from `sample`; `y` is aligned with
/// the sample's personas.
RegressionResult fit_demographics(std::span<const MaybeValue> y,
                                  const SurveySample& sample,
                                  const HypothesisSpec& spec,
                                  RobustSe se = RobustSe::hc1,
                                  std::vector<std::string>* warnings = nullptr);

struct HypothesisVerdict {
  enum class Kind { consistent_significant, consistent, neutral, inconsistent };
  std::string name;
  double coefficient = 0.0;
  int expected_sign = -1;
  bool sign_matches = false;
  double p_one_sided = 1.0;  // p-value of the expected direction
  Kind verdict = Kind::neutral;
};

std::string_view verdict_text(HypothesisVerdict::Kind kind);

/// Sign check and one-sided p-value for each non-intercept coefficient the
/// HypothesisSpec covers. Significant means p_one_sided < alpha.
std::vector<HypothesisVerdict> hypothesis_report(const RegressionResult& result,
                                                 const HypothesisSpec& spec,
                                                 double alpha = 0.05);

/// Experienced inflation per class, by category.
struct GroupEstimateTable {
  std::string reference_period;
  std::map<Category, std::map<std::size_t, double>> estimates;
  std::vector<std::string> warnings;
};

/// estimate(class) - estimate(base class) for every non-base class of the
/// spec, keyed like dummy_name. Throws Error if a class is missing.
std::map<std::string, double> ons_reference_diffs(const GroupEstimateTable& table,
                                                  const HypothesisSpec& spec);

// ---------------------------------------------------------------------------
// Aggregate responsiveness of survey means to component inflation
// ---------------------------------------------------------------------------

struct Quarter {
  int year = 2000;
  int q = 1;
  static Quarter parse(std::string_view text);  // "2011Q2"
  std::string to_string() const;
  friend auto operator<=>(const Quarter&, const Quarter&) = default;
};

struct AggregateObservation {
  Quarter quarter;
  double survey_mean = 0.0;
  std::vector<double> inputs;  // one per regressor
};

struct AggregatePanel {
  std::vector<std::string> regressors;  // e.g. food_rest, energy, other
  std::vector<AggregateObservation> observations;
};

/// Regresses the survey mean on the regressors over [from, to] (inclusive),
/// with an intercept unless `intercept` is false. Throws RegressionError if
/// fewer observations than parameters + 1 fall in the range.
RegressionResult responsiveness_regression(const AggregatePanel& panel,
                                           Quarter from, Quarter to,
                                           bool intercept = true,
                                           RobustSe se = RobustSe::hc1);

/// Shapley value of each regressor in a linear model: coefficient * input.
std::map<std::string, double> linear_contributions(
    const RegressionResult& result, const std::map<std::string, double>& inputs);

}  // namespace synthsurvey

#endif  // SYNTHSURVEY_REGRESSION_HPP
