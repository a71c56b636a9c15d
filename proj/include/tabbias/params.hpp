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

#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

namespace tabbias {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One named tensor inside a flat parameter vector (column-major storage).
struct TensorSlot {
  std::string name;
  Index offset = 0;
  Index rows = 0;
  Index cols = 0;

  Index size() const { return rows * cols; }
  bool operator==(const TensorSlot&) const = default;
};

/// Ordered, contiguous layout of named tensors. Offsets are assigned on
/// insertion so ranges are disjoint and exhaustive by construction.
class ShapeTable {
 public:
  const TensorSlot& add(std::string name, Index rows, Index cols);
  const TensorSlot& at(std::string_view name) const;
  bool contains(std::string_view name) const;
  const std::vector<TensorSlot>& slots() const { return slots_; }
  Index total_size() const { return total_; }

  bool operator==(const ShapeTable&) const = default;

 private:
  std::vector<TensorSlot> slots_;
  Index total_ = 0;
};

/// Flat parameter vector plus its shape table. The shape table is shared
/// between copies; values are copied.
class ParamSet {
 public:
  ParamSet() : shapes_(std::make_shared<const ShapeTable>()) {}
  explicit ParamSet(ShapeTable shapes);
  ParamSet(ShapeTable shapes, Vector values);

  const ShapeTable& shapes() const { return *shapes_; }
  Vector& values() { return values_; }
  const Vector& values() const { return values_; }
  Index size() const { return values_.size(); }

  Eigen::Map<Matrix> tensor(const TensorSlot& slot);
  Eigen::Map<const Matrix> tensor(const TensorSlot& slot) const;
  Eigen::Map<Matrix> tensor(std::string_view name) { return tensor(shapes_->at(name)); }
  Eigen::Map<const Matrix> tensor(std::string_view name) const { return tensor(shapes_->at(name)); }

  /// Same shape table, all zeros.
  ParamSet zeros_like() const;

  bool compatible(const ParamSet& other) const {
    return shapes_ == other.shapes_ || *shapes_ == *other.shapes_;
  }
  void require_compatible(const ParamSet& other, std::string_view what) const;

  ParamSet& operator+=(const ParamSet& rhs);
  ParamSet& operator-=(const ParamSet& rhs);
  ParamSet& operator*=(double s);
  /// this += s * x
  ParamSet& axpy(double s, const ParamSet& x);

  bool operator==(const ParamSet& rhs) const {
    return compatible(rhs) && values_ == rhs.values_;
  }

 private:
  std::shared_ptr<const ShapeTable> shapes_;
  Vector values_;
};

ParamSet operator+(ParamSet lhs, const ParamSet& rhs);
ParamSet operator-(ParamSet lhs, const ParamSet& rhs);
ParamSet operator*(double s, ParamSet p);

nlohmann::json to_json(const ShapeTable& shapes);
ShapeTable shape_table_from_json(const nlohmann::json& j);

/// Version-tagged JSON document (shape table + flat values, full precision).
nlohmann::json to_json(const ParamSet& params);
ParamSet param_set_from_json(const nlohmann::json& j);

/// Binary container: "TBPS" magic, u32 version, u64 header length, JSON shape
/// table header, then little-endian float64 values.
void save_params(const std::filesystem::path& path, const ParamSet& params);
ParamSet load_params(const std::filesystem::path& path);

}  // namespace tabbias
