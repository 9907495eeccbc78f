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

#ifndef SYNTHSURVEY_DOMAIN_HPP
#define SYNTHSURVEY_DOMAIN_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace synthsurvey {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Demographics
// ---------------------------------------------------------------------------

enum class Sex : std::uint8_t { male, female, other, undisclosed };
enum class AgeBand : std::uint8_t {
  age_16_24,
  age_25_34,
  age_35_44,
  age_45_54,
  age_55_64,
  age_65_75
};
enum class IncomeBand : std::uint8_t {
  under_10k,
  from_10k_to_20k,
  from_20k_to_35k,
  from_35k_to_45k,
  over_45k,
  undisclosed
};
enum class Housing : std::uint8_t { outright, mortgage, council, rent };
enum class SocialClass : std::uint8_t {
  upper_middle,
  lower_middle,
  skilled_working,
  working,
  pensioner
};
enum class Education : std::uint8_t { gcse, a_level, degree, unshared };
enum class Region : std::uint8_t { scotland, north, midlands, west, south_east };
enum class Work : std::uint8_t { working, not_working };

/// The demographic dimensions a persona is described by. The order is the
/// order in which categories appear in files and design matrices.
enum class Category : std::uint8_t {
  sex,
  age,
  income,
  housing,
  social_class,
  education,
  region,
  work
};

inline constexpr std::array<Category, 8> kAllCategories = {
    Category::sex,       Category::age,       Category::income,
    Category::housing,   Category::social_class, Category::education,
    Category::region,    Category::work};

std::string_view category_name(Category category);
std::optional<Category> parse_category(std::string_view name);

/// Number of classes in the closed list of `category`.
std::size_t class_count(Category category);

/// Stable machine key of a class, e.g. ("age", 0) -> "16-24".
std::string_view class_key(Category category, std::size_t index);
std::optional<std::size_t> parse_class_key(Category category,
                                           std::string_view key);

struct DemographicProfile {
  Sex sex = Sex::male;
  AgeBand age = AgeBand::age_16_24;
  IncomeBand income = IncomeBand::under_10k;
  Housing housing = Housing::council;
  SocialClass social_class = SocialClass::working;
  Education education = Education::gcse;
  Region region = Region::scotland;
  Work work = Work::working;

  /// Class index of this profile in `category` (may be out of range if the
  /// profile was built from unchecked casts; see validate_sample).
  std::size_t class_index(Category category) const;

  /// Throws Error if `index` is not a valid class of `category`.
  void set_class_index(Category category, std::size_t index);

  friend bool operator==(const DemographicProfile&,
                         const DemographicProfile&) = default;
};

/// Lower bound in years of an age band (16, 25, 35, 45, 55, 65).
int age_band_lower_bound(AgeBand band);

/// "Pensioner" is imputed as a social class from age. It is only valid for
/// bands whose lower bound reaches `min_age`.
struct PensionerRule {
  int min_age = 65;

  bool permits(AgeBand band) const { return age_band_lower_bound(band) >= min_age; }
};

struct Persona {
  std::string id;
  DemographicProfile profile;
  double weight = 1.0;
};

struct SurveySample {
  std::vector<Persona> personas;
  std::string label;
  std::uint64_t master_seed = 0;
};

struct ValidationIssue {
  enum class Kind {
    empty_sample,
    zero_total_weight,
    duplicate_id,
    negative_weight,
    non_finite_weight,
    invalid_category,
    pensioner_age
  };
  Kind kind;
  std::string persona_id;
  std::string message;
};

std::string_view issue_kind_name(ValidationIssue::Kind kind);

/// Lists every invariant violation of `sample`; empty iff the sample is valid.
std::vector<ValidationIssue> validate_sample(const SurveySample& sample,
                                             const PensionerRule& rule = {});

// ---------------------------------------------------------------------------
// Treatments
// ---------------------------------------------------------------------------

enum class Component : std::uint8_t { food, restaurants, energy, other };

inline constexpr std::size_t kComponentCount = 4;
inline constexpr std::array<Component, kComponentCount> kAllComponents = {
    Component::food, Component::restaurants, Component::energy,
    Component::other};

std::string_view component_name(Component component);
std::optional<Component> parse_component(std::string_view name);

/// Year-on-year inflation (%) of each conditioning component, together with
/// whether the component is mentioned in the prompt at all. A default
/// constructed vector is the unconditioned case: nothing is mentioned.
class TreatmentVector {
 public:
  TreatmentVector() = default;

  static TreatmentVector unconditioned() { return {}; }
  static TreatmentVector active(double food, double restaurants, double energy,
                                double other);

  double value(Component c) const { return values_[index(c)]; }
  bool is_active(Component c) const { return active_[index(c)]; }
  bool any_active() const;

  /// Sets and activates a component. Throws Error on non-finite values.
  TreatmentVector& set(Component c, double value);
  TreatmentVector& deactivate(Component c);

  /// Textual form used for hashing and cache keys; stable across platforms.
  std::string canonical() const;

  friend bool operator==(const TreatmentVector&, const TreatmentVector&) = default;

 private:
  static std::size_t index(Component c) { return static_cast<std::size_t>(c); }

  std::array<double, kComponentCount> values_{};
  std::array<bool, kComponentCount> active_{};
};

struct YearMonth {
  int year = 2000;
  int month = 1;  // 1..12

  /// Parses "YYYY-MM". Throws Error on malformed input.
  static YearMonth parse(std::string_view text);
  std::string to_string() const;
  YearMonth plus_months(int n) const;
  int serial() const { return year * 12 + (month - 1); }

  friend auto operator<=>(const YearMonth&, const YearMonth&) = default;
};

struct Scenario {
  std::string name;
  TreatmentVector treatment;
  YearMonth reference_period;
  TreatmentVector baseline;
};

/// Throws Error unless treatment and baseline have the same active set.
void validate_scenario(const Scenario& scenario);

/// Built-in conditioning values for the two survey samples and the
/// pre-cutoff historical averages, plus the basket shares.
namespace reference {
Scenario main_scenario();              // Feb 2023, historical-average baseline
Scenario cross_validation_scenario();  // Nov 2022, historical-average baseline
TreatmentVector historical_averages();
TreatmentVector zero_baseline();
std::array<double, kComponentCount> basket_shares();
}  // namespace reference

/// Players of a Shapley game: a partition of treatment components.
class GroupingScheme {
 public:
  struct Player {
    std::string name;
    std::vector<Component> components;
  };

  /// Throws Error if players overlap, are empty, or share names.
  explicit GroupingScheme(std::vector<Player> players);

  /// One player per component.
  static GroupingScheme per_component();
  /// food_rest = {food, restaurants}, energy, other.
  static GroupingScheme food_rest_energy_other();

  const std::vector<Player>& players() const { return players_; }
  std::size_t size() const { return players_.size(); }

  /// Throws Error unless the players exactly cover the active components of
  /// `t`.
  void check_covers(const TreatmentVector& t) const;

  std::optional<std::size_t> find(std::string_view name) const;

 private:
  std::vector<Player> players_;
};

// ---------------------------------------------------------------------------
// Responses
// ---------------------------------------------------------------------------

struct ResponseRecord {
  std::string persona_id;
  int horizon_years = 0;
  std::string raw_text;
  std::optional<double> value;
  std::string model_id;
  double temperature = 0.0;
  std::uint64_t option_permutation_seed = 0;
  std::string timestamp;
};

}  // namespace synthsurvey

#endif  // SYNTHSURVEY_DOMAIN_HPP
