// Copyright 2026 The tabbias Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tabbias {

/// Raised for malformed schema documents, CSV files, or cells that violate
/// their column type.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ColumnKind { continuous, integer, categorical, binary };

std::string_view to_string(ColumnKind kind);
ColumnKind parse_column_kind(std::string_view text);

inline bool is_numeric(ColumnKind kind) {
  return kind == ColumnKind::continuous || kind == ColumnKind::integer;
}

struct ColumnSpec {
  std::string name;
  ColumnKind kind = ColumnKind::continuous;
  std::vector<std::string> categories;  // categorical / binary only
  bool missing_allowed = false;

  bool operator==(const ColumnSpec&) const = default;
};

struct TableSchema {
  std::vector<ColumnSpec> columns;

  std::size_t size() const { return columns.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Throws DataError on duplicate names, empty schemas, or bad category lists.
  void validate() const;

  bool operator==(const TableSchema&) const = default;
};

struct Missing {
  bool operator==(const Missing&) const = default;
};

/// Numeric columns hold doubles, categorical/binary columns hold the category
/// label.
using Cell = std::variant<Missing, double, std::string>;

inline bool is_missing(const Cell& c) { return std::holds_alternative<Missing>(c); }

using Row = std::vector<Cell>;

struct RawTable {
  TableSchema schema;
  std::vector<Row> rows;

  std::size_t num_rows() const { return rows.size(); }

  /// Checks every cell against its column; throws DataError naming the
  /// offending row and column.
  void validate() const;

  bool operator==(const RawTable&) const = default;
};

TableSchema parse_schema(std::string_view json_text);
TableSchema load_schema(const std::filesystem::path& path);
std::string schema_to_json(const TableSchema& schema);

/// Parses CSV text (comma separated, header row, empty field = missing).
RawTable parse_table(std::string_view csv_text, const TableSchema& schema);
RawTable load_table(const std::filesystem::path& path, const TableSchema& schema);

std::string table_to_csv(const RawTable& table);
void save_table(const std::filesystem::path& path, const RawTable& table);

/// Splits one CSV record, honouring double quotes.
std::vector<std::string> split_csv_line(std::string_view line);

/// Rows at `indices`, in that order.
RawTable take_rows(const RawTable& table, std::span<const std::size_t> indices);

/// Uniform sample of n distinct row indices out of `population`, in draw order.
std::vector<std::size_t> sample_indices(std::size_t population, std::size_t n,
                                        std::uint64_t seed);

/// Uniform sample of n rows without replacement. Pure in (table, n, seed).
RawTable subsample(const RawTable& table, std::size_t n, std::uint64_t seed);

}  // namespace tabbias
