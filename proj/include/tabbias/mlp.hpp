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
#include <span>
#include <string>
#include <vector>

#include "tabbias/params.hpp"
#include "tabbias/random.hpp"

namespace tabbias {

enum class Activation { identity, relu, tanh, sigmoid };

std::string_view to_string(Activation a);
Activation parse_activation(std::string_view s);

struct MlpSpec {
  std::vector<Index> layer_sizes;
  Activation hidden_activation = Activation::relu;
  Activation output_activation = Activation::identity;

  void validate() const;
  Index input_size() const { return layer_sizes.front(); }
  Index output_size() const { return layer_sizes.back(); }
  std::size_t num_layers() const { return layer_sizes.size() - 1; }

  bool operator==(const MlpSpec&) const = default;
};

/// An MLP whose tensors live under `prefix` in a ParamSet:
/// `<prefix>.w<i>` is (in x out), `<prefix>.b<i>` is (1 x out).
struct NamedMlp {
  std::string prefix;
  MlpSpec spec;
};

void add_mlp_shapes(ShapeTable& shapes, const NamedMlp& net);

/// Uniform(+-sqrt(6/(fan_in+fan_out))) weights, zero biases.
void init_mlp(ParamSet& params, const NamedMlp& net, Rng& rng);

/// Shape table for all nets, then weights initialised net by net from one
/// seeded stream.
ParamSet init_params(std::span<const NamedMlp> nets, std::uint64_t seed);

/// Activations recorded during a forward pass; `acts[0]` is the input and
/// `acts[i+1]` the post-activation output of layer i.
struct MlpTape {
  std::vector<Matrix> acts;
};

/// Rows of `input` are independent examples.
Matrix mlp_forward(const NamedMlp& net, const ParamSet& params, const Matrix& input,
                   MlpTape* tape = nullptr);

/// Back-propagates `grad_output` (d loss / d output, same shape as the
/// output). Parameter gradients are added into `grad`; returns d loss / d input
/// (an empty matrix when `want_input_grad` is false).
Matrix mlp_backward(const NamedMlp& net, const ParamSet& params, const MlpTape& tape,
                    Matrix grad_output, ParamSet& grad, bool want_input_grad = true);

void apply_activation(Activation a, Matrix& m);
/// Multiplies `grad` in place by the activation derivative, written in terms of
/// the activation's output.
void activation_backward(Activation a, const Matrix& output, Matrix& grad);

}  // namespace tabbias
