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
#include <vector>

#include <json.hpp>

#include "tabbias/gmm.hpp"
#include "tabbias/mlp.hpp"
#include "tabbias/objective.hpp"
#include "tabbias/vae.hpp"

// Discriminator-based divergence estimation between a real and a synthetic
// sample. KL is reported in nats, JS in bits (so it lies in [0, 1]).

namespace tabbias {

inline constexpr double kDiscriminatorClamp = 1e-6;

struct DiscriminatorConfig {
  std::vector<Index> hidden = {128, 64};
  int max_epochs = 300;
  int patience = 20;
  Index batch_size = 256;
  double learning_rate = 1e-3;
  double val_fraction = 0.2;

  void validate() const;
};

nlohmann::json to_json(const DiscriminatorConfig& c);
DiscriminatorConfig discriminator_config_from_json(const nlohmann::json& j, DiscriminatorConfig defaults = {});

struct Discriminator {
  NamedMlp net;  // logits; probabilities via sigmoid
  ParamSet params;
  int epochs_run = 0;
  int best_epoch = 0;
  double val_loss = 0.0;
  double val_accuracy = 0.0;

  /// D(x) clamped to [eps, 1 - eps], one entry per row.
  Vector predict(const Matrix& x) const;
};

/// Architecture used for inputs of width `input_dim`.
NamedMlp discriminator_net(Index input_dim, const DiscriminatorConfig& config = {});

/// Mean binary cross-entropy of logits(x) against labels (1 = real).
Objective discriminator_objective(const NamedMlp& net, Matrix x, Vector labels);

/// BCE training, real labeled 1 and synthetic 0, with an 80/20 split and
/// early stopping on the validation loss.
Discriminator train_discriminator(const Matrix& real, const Matrix& synth, std::uint64_t seed,
                                  const DiscriminatorConfig& config = {});

/// Mean over real rows of ln(D / (1 - D)).
double estimate_kl(const Discriminator& disc, const Matrix& real_l);

/// 1 + mean log2 D(real) / 2 + mean log2 (1 - D(synth)) / 2, before clamping.
double estimate_js_raw(const Discriminator& disc, const Matrix& real_l, const Matrix& synth_l);
/// estimate_js_raw clamped to [0, 1].
double estimate_js(const Discriminator& disc, const Matrix& real_l, const Matrix& synth_l);

inline constexpr Index kReliableM = 1000;
inline constexpr Index kReliableL = 500;
inline bool is_reliable(Index m, Index l) { return m >= kReliableM && l >= kReliableL; }

struct RepeatEstimate {
  double js = 0.0;
  double js_raw = 0.0;
  double kl = 0.0;
  double val_accuracy = 0.0;
  int epochs_run = 0;
  std::vector<Index> train_rows;  // real-pool rows used for the discriminator
  std::vector<Index> est_rows;    // real-pool rows used for estimation
};

struct DivergenceReport {
  double js_mean = 0.0;
  double js_std = 0.0;
  double kl_mean = 0.0;
  double kl_std = 0.0;
  double js_raw_mean = 0.0;  // pre-clamp diagnostic
  Index m = 0;
  Index l = 0;
  int repeats = 0;
  bool reliable = false;
  std::vector<RepeatEstimate> per_repeat;
};

/// Mean and sample standard deviation (0 for a single value).
std::pair<double, double> mean_std(std::span<const double> xs);

/// Fresh synthetic rows for one repeat: n rows from `seed`.
using SyntheticSource = std::function<Matrix(Index n, std::uint64_t seed)>;

struct ValidationOptions {
  int repeats = 5;
  DiscriminatorConfig discriminator;
  std::size_t workers = 1;
};

/// Per repeat r: carve m + l disjoint real rows from the pool, draw m + l
/// fresh synthetic rows, train a discriminator on the first m of each and
/// estimate on the remaining l. Throws DataError if the pool is too small.
DivergenceReport divergence_report(const SyntheticSource& synth, const Matrix& real_pool, Index m, Index l,
                                   std::uint64_t seed, const ValidationOptions& options = {});

/// Synthetic source backed by a trained VAE and its latent mixture.
/// `postprocess` (optional) is applied to every generated block.
SyntheticSource vae_source(TrainedVae model, GmmModel gmm,
                           std::function<EncodedMatrix(const EncodedMatrix&)> postprocess = {});

DivergenceReport divergence_report(const TrainedVae& model, const GmmModel& gmm, const Matrix& real_pool, Index m,
                                   Index l, std::uint64_t seed, const ValidationOptions& options = {});

nlohmann::json to_json(const DivergenceReport& r);
DivergenceReport divergence_report_from_json(const nlohmann::json& j);

}  // namespace tabbias
