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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tabbias/validate.hpp"

// Calibration of the divergence estimators against 1-D distributions whose
// KL and JS are known in closed form or by quadrature.

namespace tabbias {

struct Mixture1d {
  std::vector<double> weights;
  std::vector<double> means;
  std::vector<double> stddevs;

  static Mixture1d gaussian(double mean, double stddev) { return {{1.0}, {mean}, {stddev}}; }

  void validate() const;
  double pdf(double x) const;
  Matrix sample(Index n, Rng& rng) const;  // n x 1
};

struct OracleCase {
  std::string name;
  Mixture1d real;       // p
  Mixture1d synthetic;  // q
};

/// Named cases: identical, shift (N(0,1) vs N(1,1)), scale (N(0,1) vs
/// N(0,4)), gmm2 (two-component mixture vs a moment-matched Gaussian).
std::vector<std::string> oracle_case_names();
OracleCase oracle_case(const std::string& name);
/// N(0,1) vs N(mu,1).
OracleCase gaussian_shift_case(double mu);

/// KL(p || q) in nats: closed form for two Gaussians, quadrature otherwise.
double true_kl(const Mixture1d& p, const Mixture1d& q);
/// JS(p, q) in bits by quadrature.
double true_js(const Mixture1d& p, const Mixture1d& q);

struct OracleReport {
  std::string name;
  double true_kl = 0.0;
  double true_js = 0.0;
  DivergenceReport estimate;
  std::optional<double> kl_relative_error;  // absent when true_kl is 0
  double js_absolute_error = 0.0;
};

/// Samples both distributions, runs the validation pipeline and compares.
OracleReport run_oracle(const OracleCase& c, Index m, Index l, std::uint64_t seed,
                        const ValidationOptions& options = {});

nlohmann::json to_json(const OracleReport& r);

}  // namespace tabbias
