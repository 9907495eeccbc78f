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

#ifndef SYNTHSURVEY_DEMOGRAPHIC_MAP_HPP
#define SYNTHSURVEY_DEMOGRAPHIC_MAP_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synthsurvey/domain.hpp"

namespace synthsurvey {

/// Share of an official-statistics group allocated to one survey class.
struct OnsShare {
  std::string group;
  double fraction = 1.0;
};

/// One row of the demographic mapping asset: survey codes, prompt wording,
/// survey wording and the official groups feeding the class.
struct DemographicEntry {
  Category category = Category::sex;
  std::size_t class_index = 0;
  std::vector<std::string> codes;  // "NaN" stands for a blank survey field
  std::string prompt_wording;
  std::string survey_wording;  // empty when identical to the prompt wording
  std::vector<OnsShare> ons_groups;
};

class DemographicMap {
 public:
  /// Throws Error unless every class of every category has exactly one
  /// entry and no code is used twice within a category.
  explicit DemographicMap(std::vector<DemographicEntry> entries);

  const std::vector<DemographicEntry>& entries() const { return entries_; }
  const DemographicEntry& entry(Category category, std::size_t index) const;

  const std::string& wording(Category category, std::size_t index) const {
    return entry(category, index).prompt_wording;
  }

  /// Class index of a survey code; blank and "nan" codes are looked up as
  /// "NaN".
  std::optional<std::size_t> decode(Category category, std::string_view code) const;

  /// First survey code of a class, or "" for classes without one (the
  /// imputed pensioner class).
  std::string encode(Category category, std::size_t index) const;

 private:
  std::vector<DemographicEntry> entries_;
  std::array<std::vector<std::size_t>, kAllCategories.size()> lookup_;
};

/// Asset format: CSV with header
/// `category,class,codes,prompt_wording,survey_wording,ons_groups`; codes
/// are '|'-separated, ONS groups ';'-separated with an optional "(a/b)"
/// fraction suffix.
DemographicMap parse_demographic_map(std::string_view text);
DemographicMap load_demographic_map(const std::filesystem::path& path);

/// The shipped asset (data/demographic_map.csv), compiled into the library.
const DemographicMap& default_demographic_map();
std::string_view default_demographic_map_text();

}  // namespace synthsurvey

#endif  // SYNTHSURVEY_DEMOGRAPHIC_MAP_HPP
