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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace tabbias {

using Rng = std::mt19937_64;

/// Mixes a base seed with a sequence of stream tags (splitmix64 finalizer).
/// Distinct tag sequences give statistically independent streams.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags);

inline Rng make_rng(std::uint64_t base, std::initializer_list<std::uint64_t> tags) {
  return Rng(derive_seed(base, tags));
}

/// Fisher-Yates shuffle of 0..n-1.
std::vector<std::size_t> permutation(std::size_t n, Rng& rng);

Eigen::MatrixXd standard_normal(Eigen::Index rows, Eigen::Index cols, Rng& rng);

double uniform01(Rng& rng);

// Stream tags, so call sites do not collide by accident.
namespace stream {
inline constexpr std::uint64_t init = 0x1;
inline constexpr std::uint64_t split = 0x2;
inline constexpr std::uint64_t shuffle = 0x3;
inline constexpr std::uint64_t noise = 0x4;
inline constexpr std::uint64_t val_noise = 0x5;
inline constexpr std::uint64_t generate = 0x6;
inline constexpr std::uint64_t gmm = 0x7;
inline constexpr std::uint64_t task = 0x8;
inline constexpr std::uint64_t train = 0x9;
inline constexpr std::uint64_t maml = 0xa;
inline constexpr std::uint64_t repeat = 0xb;
inline constexpr std::uint64_t carve = 0xc;
inline constexpr std::uint64_t discriminator = 0xd;
inline constexpr std::uint64_t ensemble = 0xe;
inline constexpr std::uint64_t oracle = 0xf;
}  // namespace stream

}  // namespace tabbias
