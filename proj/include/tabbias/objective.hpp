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
#include <functional>
#include <stdexcept>
#include <vector>

#include "tabbias/params.hpp"

namespace tabbias {

/// A training loss that diverged (NaN or infinite value or gradient).
class NonFiniteLoss : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scalar loss over parameters with its reverse-mode gradient. When `grad`
/// is non-null, `evaluate` overwrites it with d loss / d params.
///
/// `hessian_vector` is optional; without it second-order consumers fall back
/// to central differences of the gradient.
struct Objective {
  std::function<double(const ParamSet& params, ParamSet* grad)> evaluate;
  std::function<ParamSet(const ParamSet& params, const ParamSet& direction)> hessian_vector;
};

struct LossAndGrad {
  double loss = 0.0;
  ParamSet grad;
};

/// Evaluates loss and gradient; throws NonFiniteLoss on divergence.
LossAndGrad loss_and_grad(const Objective& objective, const ParamSet& params);

/// a*f + b*g
Objective linear_combination(double a, Objective f, double b, Objective g);

/// H(params) * direction. Exact when the objective supplies it; otherwise
/// (g(p + e*v) - g(p - e*v)) / 2e with e scaled to the direction norm, which
/// is exact for quadratic losses up to rounding.
ParamSet hessian_vector_product(const Objective& objective, const ParamSet& params,
                                const ParamSet& direction);

struct CoordinateCheck {
  Index index = 0;
  double analytic = 0.0;
  double numeric = 0.0;
  double relative_error = 0.0;
};

struct GradCheckReport {
  std::vector<CoordinateCheck> checked;
  std::vector<Index> flagged;  // coordinates whose error is not below tolerance
  double max_relative_error = 0.0;

  bool passed() const { return flagged.empty(); }
};

struct GradCheckOptions {
  double tolerance = 1e-3;
  std::size_t coordinates = 20;
  double step = 1e-4;
  std::uint64_t seed = 0;
};

/// Compares the analytic gradient with central differences on a random subset
/// of coordinates. Relative error is |a - n| / max(|a|, |n|, 1e-8).
/// `analytic_override` lets tests inject a corrupted gradient.
GradCheckReport grad_check(const Objective& objective, const ParamSet& params,
                           const GradCheckOptions& options = {},
                           const ParamSet* analytic_override = nullptr);

}  // namespace tabbias
