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
#include <filesystem>
#include <optional>
#include <vector>

#include <json.hpp>

#include "tabbias/encoder.hpp"
#include "tabbias/gmm.hpp"
#include "tabbias/mlp.hpp"
#include "tabbias/objective.hpp"

namespace tabbias {

struct VaeConfig {
  Index latent_dim = 10;
  Index hidden_size = 256;
  int depth = 2;  // hidden layers in each of encoder and decoder
  int max_epochs = 500;
  Index batch_size = 128;
  int patience = 30;
  double learning_rate = 1e-3;
  double val_fraction = 0.1;
  Index gmm_components = 10;

  /// Throws std::invalid_argument. max_epochs may be 0 (evaluate-only run).
  void validate() const;
  bool operator==(const VaeConfig&) const = default;
};

nlohmann::json to_json(const VaeConfig& c);
VaeConfig vae_config_from_json(const nlohmann::json& j, VaeConfig defaults = {});

/// Network layout for a mixed-type VAE over a group map.
///
/// Encoder: D -> hidden^depth -> 2*latent (mu, log sigma^2).
/// Decoder: latent -> hidden^depth -> D, read per group: continuous dims are
/// Gaussian means (with a free per-dim log-variance `dec.logvar`), indicator
/// dims are Bernoulli logits, categorical blocks are softmax logits.
class VaeLayout {
 public:
  VaeLayout(GroupMap groups, const VaeConfig& config);

  const GroupMap& groups() const { return groups_; }
  const NamedMlp& encoder() const { return encoder_; }
  const NamedMlp& decoder() const { return decoder_; }
  Index data_width() const { return width_; }
  Index latent_dim() const { return latent_; }
  const std::vector<Index>& continuous_dims() const { return continuous_; }
  const std::vector<Index>& indicator_dims() const { return indicator_; }

  ShapeTable shapes() const;
  ParamSet init_params(std::uint64_t seed) const;

 private:
  GroupMap groups_;
  Index width_ = 0;
  Index latent_ = 0;
  NamedMlp encoder_;
  NamedMlp decoder_;
  std::vector<Index> continuous_;
  std::vector<Index> indicator_;
};

struct ElboTerms {
  double reconstruction = 0.0;  // per row
  double kl = 0.0;              // per row
  double total() const { return reconstruction + kl; }
};

/// Negative ELBO per row for `batch` with caller-supplied reparameterization
/// noise (rows x latent). Writes the gradient of the per-row mean into `grad`
/// when non-null.
ElboTerms elbo_loss(const VaeLayout& layout, const ParamSet& params, const Matrix& batch,
                    const Matrix& noise, ParamSet* grad = nullptr);

/// Fixed batch and noise bound into an Objective.
Objective elbo_objective(const VaeLayout& layout, Matrix batch, Matrix noise);

struct EpochRecord {
  int epoch = 0;
  double train_loss = 0.0;
  double val_loss = 0.0;
};

struct TrainedVae {
  VaeConfig config;
  GroupMap groups;
  ParamSet params;
  double best_val_loss = 0.0;  // negative ELBO, nats per row
  int best_epoch = 0;
  std::vector<EpochRecord> curve;  // epoch 0 is the untrained starting point
  std::uint64_t seed = 0;

  VaeLayout layout() const { return VaeLayout(groups, config); }
};

/// Deterministic 90/10 split of `rows` row indices (validation first).
struct TrainValSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> val;
};
TrainValSplit split_train_val(std::size_t rows, double val_fraction, std::uint64_t seed);

/// Mini-batch Adam on the negative ELBO with early stopping on the
/// validation loss. Returns the best-validation parameters. `init` realises a
/// prescribed starting point; absent, weights are freshly initialised.
TrainedVae train_vae(const EncodedMatrix& data, const VaeConfig& config, std::uint64_t seed,
                     const ParamSet* init = nullptr);

/// Posterior means mu(x), one row per input row.
Matrix latent_means(const TrainedVae& model, const Matrix& data);

/// Raw decoder outputs for latent codes (means / logits per group).
Matrix decode_latent(const TrainedVae& model, const Matrix& z);

GmmModel fit_latent_gmm(const TrainedVae& model, const EncodedMatrix& data, Index components,
                        std::uint64_t seed = 0);

/// How continuous dims are emitted: the decoder mean, or a draw from the
/// decoder's Gaussian (mean plus exp(dec.logvar / 2) noise).
enum class ContinuousOutput { mean, sample };

/// Draws z from the mixture and decodes it: continuous dims take the decoder
/// mean by default, indicator and categorical groups are sampled. Pure in its
/// arguments.
EncodedMatrix generate(const TrainedVae& model, const GmmModel& gmm, Index n, std::uint64_t seed,
                       ContinuousOutput continuous = ContinuousOutput::mean);

nlohmann::json model_metadata(const TrainedVae& model, const GmmModel* gmm);

/// Writes `<stem>.params` (binary ParamSet) and `<stem>.json` (config, group
/// map, seed, losses, mixture).
void save_model(const std::filesystem::path& stem, const TrainedVae& model, const GmmModel* gmm);

struct LoadedModel {
  TrainedVae model;
  std::optional<GmmModel> gmm;
};
LoadedModel load_model(const std::filesystem::path& stem);

}  // namespace tabbias
