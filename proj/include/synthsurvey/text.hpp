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

// Small text helpers shared by the file readers and table writers.

#ifndef SYNTHSURVEY_TEXT_HPP
#define SYNTHSURVEY_TEXT_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace synthsurvey::text {

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double x);
/// Fixed notation with `decimals` digits, rounding half to even on the exact
/// binary value.
std::string format_fixed(double x, int decimals);

std::optional<double> parse_double(std::string_view s);
std::optional<std::int64_t> parse_int(std::string_view s);

/// Reads a delimiter-separated file with optional double-quoted fields.
/// Blank lines and lines starting with '#' are skipped. Each row keeps its
/// 1-based source line number.
struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> fields;
};
std::vector<CsvRow> parse_csv(std::string_view content, char sep = ',');
std::string csv_escape(std::string_view field, char sep = ',');

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

/// Stable 64-bit hash (FNV-1a followed by a splitmix64 finaliser).
std::uint64_t stable_hash(std::string_view bytes);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

std::string sha256_hex(std::string_view bytes);

}  // namespace synthsurvey::text

#endif  // SYNTHSURVEY_TEXT_HPP
