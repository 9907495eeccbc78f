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

#ifndef SYNTHSURVEY_STATS_HPP
#define SYNTHSURVEY_STATS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "synthsurvey/domain.hpp"

namespace synthsurvey {

using MaybeValue = std::optional<double>;

class StatsError : public Error {
 public:
  using Error::Error;
};

/// Sum w y / sum w over pairs with a value and a weight. Missing values drop
/// their weight. Throws StatsError without a positively weighted value.
double weighted_mean(std::span<const MaybeValue> values,
                     std::span<const double> weights);

enum class SdCorrection {
  frequency,  // variance times sum w / (sum w - 1)
  none        // sum w (y - mean)^2 / sum w
};

/// Weighted standard deviation. Needs at least two usable pairs, and
/// sum w > 1 for the frequency correction.
double weighted_sd(std::span<const MaybeValue> values,
                   std::span<const double> weights,
                   SdCorrection correction = SdCorrection::frequency);

struct DistributionSummary {
  double mean = 0.0;
  double sd = 0.0;
  std::size_t n = 0;       // non-missing values
  std::size_t n_miss = 0;
  bool weights_used = false;
};

/// Mean and SD of `values`; unit weights when `weights` is empty.
DistributionSummary summarize(std::span<const MaybeValue> values,
                              std::span<const double> weights,
                              SdCorrection correction = SdCorrection::frequency);

/// 1/2 |mean gap|^l + 1/2 |sd gap|^l for l in {1, 2}.
double calibration_loss_from_gaps(double mean_gap, double sd_gap, int l);
double calibration_loss(const DistributionSummary& model,
                        const DistributionSummary& benchmark, int l);

struct Correlation {
  double r = 0.0;
  double p_value = 1.0;  // two-sided, t distribution with n - 2 df
  std::size_t n = 0;
};

/// Unweighted Pearson correlation over complete pairs. Throws StatsError
/// for fewer than three pairs or a constant vector.
Correlation pearson(std::span<const MaybeValue> x, std::span<const MaybeValue> y);
Correlation pearson(std::span<const double> x, std::span<const double> y);

struct CorrelationMatrix {
  std::vector<int> keys;
  /// r[i][j]; nullopt where the pair is degenerate. Unit diagonal.
  std::vector<std::vector<std::optional<double>>> r;
};

/// Pairwise Pearson correlations between answer vectors keyed by horizon.
CorrelationMatrix cross_horizon_matrix(
    const std::map<int, std::vector<MaybeValue>>& responses);

struct Similarity {
  double pearson = 0.0;
  double cosine = 0.0;
  std::size_t n = 0;
};

/// Pearson correlation and cosine similarity over the names both vectors
/// share. Throws StatsError if fewer than two names are shared.
Similarity coef_similarity(const std::map<std::string, double>& a,
                           const std::map<std::string, double>& b);

/// Linear-interpolated quantile (type 7) of the non-missing values.
double quantile(std::vector<double> values, double q);

}  // namespace synthsurvey

#endif  // SYNTHSURVEY_STATS_HPP
