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

#include <cstdint>

#include "tabbias/params.hpp"

namespace tabbias {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

class AdamState {
 public:
  AdamState(const ParamSet& like, AdamConfig config = {});

  const AdamConfig& config() const { return config_; }
  std::int64_t step() const { return step_; }
  const Vector& first_moment() const { return m_; }
  const Vector& second_moment() const { return v_; }

  /// One bias-corrected Adam update of `params` in place.
  void apply(ParamSet& params, const ParamSet& grad);

 private:
  AdamConfig config_;
  ShapeTable shapes_;
  Vector m_;
  Vector v_;
  std::int64_t step_ = 0;
};

inline void adam_step(AdamState& state, ParamSet& params, const ParamSet& grad) {
  state.apply(params, grad);
}

}  // namespace tabbias
