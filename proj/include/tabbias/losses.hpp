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

#include "tabbias/params.hpp"

// Differentiable loss primitives. Each returns the loss summed over rows
// (and over dims where applicable) and writes the gradient of that sum into
// the supplied output (same shape as the differentiated input). Outputs
// named `*_acc` are accumulated into rather than overwritten.

namespace tabbias {

using ConstMatrixRef = Eigen::Ref<const Matrix>;
using MatrixRef = Eigen::Ref<Matrix>;

/// -sum log softmax(logits)[target] for one-hot (or soft) targets.
double softmax_cross_entropy(const ConstMatrixRef& logits, const ConstMatrixRef& targets,
                             MatrixRef dlogits);

/// Row-wise softmax.
Matrix softmax(const ConstMatrixRef& logits);

/// Bernoulli negative log-likelihood with logits, numerically stable.
double bce_with_logits(const ConstMatrixRef& logits, const ConstMatrixRef& targets, MatrixRef dlogits);

/// Gaussian NLL, 0.5*(log 2pi + lv_j + (x - m)^2 exp(-lv_j)), with one
/// log-variance per column shared across rows.
double gaussian_nll(const ConstMatrixRef& mean, const ConstMatrixRef& target,
                    const Eigen::Ref<const Eigen::RowVectorXd>& logvar, MatrixRef dmean,
                    Eigen::Ref<Eigen::RowVectorXd> dlogvar_acc);

/// KL(N(mu, exp(lv)) || N(0, I)) = 0.5 * sum(mu^2 + exp(lv) - lv - 1).
double gaussian_kl(const ConstMatrixRef& mu, const ConstMatrixRef& logvar, MatrixRef dmu_acc,
                   MatrixRef dlogvar_acc);

/// z = mu + exp(lv/2) * noise, with noise supplied by the caller.
Matrix reparameterize(const ConstMatrixRef& mu, const ConstMatrixRef& logvar, const ConstMatrixRef& noise);
void reparameterize_backward(const ConstMatrixRef& dz, const ConstMatrixRef& logvar,
                             const ConstMatrixRef& noise, MatrixRef dmu_acc, MatrixRef dlogvar_acc);

}  // namespace tabbias
