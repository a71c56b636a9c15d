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
#include <vector>

#include <json.hpp>

#include "tabbias/params.hpp"
#include "tabbias/random.hpp"

namespace tabbias {

struct GmmConfig {
  Index components = 10;
  int max_iterations = 200;
  double tolerance = 1e-7;   // stop when mean log-likelihood improves by less
  double jitter = 1e-6;      // added to every covariance diagonal
  double min_weight = 1e-8;  // components below this weight are dropped
};

/// Full-covariance Gaussian mixture. Stored covariances include the jitter.
struct GmmModel {
  Vector weights;
  std::vector<Vector> means;
  std::vector<Matrix> covariances;
  /// Mean per-point log-likelihood after each E-step.
  std::vector<double> log_likelihood_trace;
  /// Number of components removed for vanishing weight during the fit.
  int dropped_components = 0;
  double jitter = 0.0;

  Index num_components() const { return weights.size(); }
  Index dim() const { return means.empty() ? 0 : means.front().size(); }

  /// Rows are draws.
  Matrix sample(Index n, Rng& rng) const;
  double mean_log_likelihood(const Matrix& points) const;
};

/// EM with k-means++ seeding. Rows of `points` are observations; requires
/// 1 <= components <= rows.
GmmModel fit_gmm(const Matrix& points, const GmmConfig& config, std::uint64_t seed);

nlohmann::json to_json(const GmmModel& gmm);
GmmModel gmm_from_json(const nlohmann::json& j);

}  // namespace tabbias
