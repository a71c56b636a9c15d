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
#include <span>
#include <vector>

#include <json.hpp>

#include "tabbias/vae.hpp"

// Inductive-bias weights theta_0 for the fine-tuned generator, built from an
// ensemble of VAEs trained on the same small table with different seeds.

namespace tabbias {

struct SeedEnsemble {
  std::vector<TrainedVae> members;
  /// Latent mixture per member, fitted on `training_data`. May be empty, in
  /// which case consumers fit one on demand.
  std::vector<GmmModel> samplers;
  EncodedMatrix training_data;

  std::size_t size() const { return members.size(); }
  /// Throws if empty or if members disagree on config or layout.
  void validate() const;
};

/// Seed used for ensemble member `index` (0-based; member s is "seed s+1").
std::uint64_t member_seed(std::uint64_t base_seed, std::size_t index);

/// Trains `count` members on `data` (seeds 1..count derived from base_seed)
/// and fits each member's latent mixture. Members train concurrently on up
/// to `workers` threads; results do not depend on the worker count.
SeedEnsemble train_ensemble(const EncodedMatrix& data, const VaeConfig& config, std::size_t count,
                            std::uint64_t base_seed, std::size_t workers = 1);

/// argmin of validation losses, lowest index on ties.
std::size_t best_seed(std::span<const double> val_losses);
std::size_t best_seed(const SeedEnsemble& ensemble);

/// Task s: n_per_task rows generated by member s.
std::vector<EncodedMatrix> make_task_datasets(const SeedEnsemble& ensemble, Index n_per_task,
                                              std::uint64_t seed);

/// Synthetic rows from the best member, then a fresh VAE trained on them.
ParamSet pretrain_bias(const SeedEnsemble& ensemble, Index n_synth, const VaeConfig& config,
                       std::uint64_t seed);

/// Coordinate-wise mean of member parameters.
ParamSet average_params(std::span<const ParamSet> params);
ParamSet average_bias(const SeedEnsemble& ensemble);

struct MamlConfig {
  double inner_lr = 1e-2;   // alpha
  double outer_lr = 1e-3;   // gamma
  int inner_steps = 5;
  int outer_iterations = 300;
  std::size_t meta_batch = 5;  // clipped to the number of tasks
  bool first_order = true;
  double task_split_fraction = 0.8;  // meta-train share of each task
  std::size_t workers = 1;

  void validate() const;
};

nlohmann::json to_json(const MamlConfig& c);
MamlConfig maml_config_from_json(const nlohmann::json& j, MamlConfig defaults = {});

/// One meta-learning task: samplers for the meta-train loss (one draw per
/// inner step) and the meta-validation loss.
struct MetaTask {
  std::function<Objective(Rng&)> train_loss;
  std::function<Objective(Rng&)> val_loss;
};

enum class MetaRole : std::uint64_t { inner = 1, validation = 2 };

/// Random stream handed to task `task` in outer iteration `iteration`.
std::uint64_t maml_stream_seed(std::uint64_t seed, int iteration, std::size_t task, MetaRole role);

/// Tasks picked in one outer iteration: all of them in order when
/// meta_batch >= tasks, otherwise a seeded sample without replacement.
std::vector<std::size_t> maml_task_selection(std::size_t num_tasks, const MamlConfig& config,
                                             std::uint64_t seed, int iteration);

struct MetaGradient {
  double val_loss = 0.0;  // meta-validation loss at the adapted weights
  ParamSet grad;
};

/// Adapts theta on one task with `inner_steps` SGD steps (minibatches drawn
/// from `inner_seed`) and differentiates the meta-validation loss (drawn from
/// `val_seed`). Second-order mode returns the exact theta-gradient of
/// L_val(w_K(theta)); first-order mode returns grad L_val at w_K.
MetaGradient maml_task_gradient(const ParamSet& theta, const MetaTask& task, const MamlConfig& config,
                                std::uint64_t inner_seed, std::uint64_t val_seed);

/// L_val(w_K(theta)) for the same streams, without gradients.
double maml_outer_loss(const ParamSet& theta, const MetaTask& task, const MamlConfig& config,
                       std::uint64_t inner_seed, std::uint64_t val_seed);

/// Bilevel optimisation: per selected task, inner SGD steps
/// w <- w - alpha * grad L_train(w) from theta, then
/// theta <- theta - gamma * sum_b g_b, where g_b is the meta-validation
/// gradient at the adapted weights (first order) or its pull-back through the
/// inner steps (second order).
ParamSet maml_optimize(ParamSet theta, std::span<const MetaTask> tasks, const MamlConfig& config,
                       std::uint64_t seed);

/// VAE meta-tasks: each task matrix is split into meta-train/meta-val rows;
/// losses are the negative ELBO on minibatches with fresh noise.
std::vector<MetaTask> make_vae_meta_tasks(std::span<const EncodedMatrix> tasks, const MamlConfig& config,
                                          const VaeConfig& vae_config, std::uint64_t seed);

ParamSet maml_bias(std::span<const EncodedMatrix> tasks, const MamlConfig& config,
                   const VaeConfig& vae_config, std::uint64_t seed);

/// Fresh VAE trained on the task-major concatenation of all tasks.
ParamSet drs_bias(std::span<const EncodedMatrix> tasks, const VaeConfig& config, std::uint64_t seed);

/// train_vae from theta0 on real data with a fresh optimiser state.
TrainedVae fine_tune(const ParamSet& theta0, const EncodedMatrix& real, const VaeConfig& config,
                     std::uint64_t seed);

}  // namespace tabbias
