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


// Typed result tables written as CSV (lossless) or Markdown (two decimals).

#ifndef SYNTHSURVEY_TABLE_HPP
#define SYNTHSURVEY_TABLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace synthsurvey {

class Table {
 public:
  /// Empty cells are written as "NA".
  using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

  explicit Table(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  /// Throws Error unless the row has one cell per column.
  void add_row(std::vector<Cell> row);

  std::optional<std::size_t> column_index(std::string_view name) const;
  const Cell& at(std::size_t row, std::string_view column) const;
  /// Numeric value of a cell (double or integer); nullopt for NA or text.
  std::optional<double> number(std::size_t row, std::string_view column) const;

  /// Doubles use the shortest round-trip form and always carry a decimal
  /// point or exponent, so parse_csv restores the cell types exactly.
  std::string to_csv() const;
  std::string to_markdown(int decimals = 2) const;

  /// Inverse of to_csv: "NA" is empty, integers and decimals are numeric,
  /// anything else is text.
  static Table parse_csv(std::string_view text);

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// Convenience for optional numbers.
inline Table::Cell cell(const std::optional<double>& v) {
  return v ? Table::Cell(*v) : Table::Cell();
}

}  // namespace synthsurvey

#endif  // SYNTHSURVEY_TABLE_HPP
