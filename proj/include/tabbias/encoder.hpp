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

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "tabbias/schema.hpp"

namespace tabbias {

/// How a run of encoded dimensions is modelled.
///  - continuous: one standardized dim (Gaussian likelihood)
///  - indicator:  one 0/1 missingness flag for a numeric column (Bernoulli)
///  - categorical: one-hot block (softmax)
enum class GroupKind { continuous, indicator, categorical };

std::string_view to_string(GroupKind kind);

struct EncodedGroup {
  std::string column;
  Eigen::Index offset = 0;
  Eigen::Index width = 0;
  GroupKind kind = GroupKind::continuous;

  bool operator==(const EncodedGroup&) const = default;
};

using GroupMap = std::vector<EncodedGroup>;

Eigen::Index total_width(const GroupMap& groups);

/// Dense encoded data, one row per record.
struct EncodedMatrix {
  Eigen::MatrixXd values;
  GroupMap groups;

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }
};

/// Rows of `m` at `indices`, same group map.
EncodedMatrix take_rows(const EncodedMatrix& m, std::span<const std::size_t> indices);

/// Vertical concatenation; all inputs must share one group map.
EncodedMatrix concat_rows(std::span<const EncodedMatrix> parts);

class Encoder {
 public:
  struct Column {
    ColumnKind kind = ColumnKind::continuous;
    double mean = 0.0;
    double stddev = 1.0;
    bool has_indicator = false;          // numeric columns with missing values allowed
    std::vector<std::string> labels;     // categorical: index -> label
    bool has_missing_category = false;   // categorical: extra MISSING slot at labels.size()

    bool operator==(const Column&) const = default;
  };

  Encoder() = default;
  Encoder(TableSchema schema, std::vector<Column> columns);

  const TableSchema& schema() const { return schema_; }
  const std::vector<Column>& columns() const { return columns_; }
  const GroupMap& group_map() const { return groups_; }
  Eigen::Index width() const { return total_width(groups_); }

  bool operator==(const Encoder& other) const {
    return schema_ == other.schema_ && columns_ == other.columns_;
  }

 private:
  TableSchema schema_;
  std::vector<Column> columns_;
  GroupMap groups_;
};

/// Fits standardization statistics (population std, after mean imputation)
/// and category maps. Requires at least two rows and nonzero spread in every
/// numeric column.
Encoder fit_encoder(const RawTable& table);

EncodedMatrix encode(const Encoder& enc, const RawTable& table);

/// Inverse of encode. Integer columns are rounded, categorical groups take
/// the argmax (lowest index on ties), indicator dims >= 0.5 mean missing.
RawTable decode(const Encoder& enc, const EncodedMatrix& m);

nlohmann::json to_json(const GroupMap& groups);
GroupMap group_map_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Encoder& enc);
Encoder encoder_from_json(const nlohmann::json& j);

}  // namespace tabbias
