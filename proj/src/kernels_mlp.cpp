// Copyright 2026 The fixposit Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small fully connected classifier: 64 -> 32 -> 16 -> 10 with ReLU hidden
// layers. Only the dense-layer products go through the multiplier.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "kernels.hpp"

namespace fixposit::kernels {
namespace {

constexpr std::array<std::size_t, 4> kLayers = {64, 32, 16, 10};

struct Dense {
  std::size_t in = 0;
  std::size_t out = 0;
  std::vector<float> weights;  // out x in
  std::vector<float> bias;
};

std::vector<float> apply(const Dense& layer, const std::vector<float>& x, bool relu,
                         Multiplier& mul) {
  std::vector<float> y(layer.out);
  for (std::size_t o = 0; o < layer.out; ++o) {
    float acc = layer.bias[o];
    for (std::size_t i = 0; i < layer.in; ++i) acc += mul(layer.weights[o * layer.in + i], x[i]);
    y[o] = relu && acc < 0.0f ? 0.0f : acc;
  }
  return y;
}

}  // namespace

MlpOutput mlp_forward(std::size_t batch, std::uint64_t seed, Multiplier& mul) {
  InputGenerator gen("mlp_forward", seed);
  std::vector<Dense> net;
  for (std::size_t l = 0; l + 1 < kLayers.size(); ++l) {
    Dense d{kLayers[l], kLayers[l + 1], {}, {}};
    // He-style uniform initialisation.
    const auto limit = static_cast<float>(std::sqrt(6.0 / static_cast<double>(d.in)));
    d.weights.resize(d.in * d.out);
    for (auto& w : d.weights) w = gen.uniform(-limit, limit);
    d.bias.resize(d.out);
    for (auto& b : d.bias) b = gen.uniform(-0.1f, 0.1f);
    net.push_back(std::move(d));
  }

  MlpOutput result;
  result.classes = kLayers.back();
  result.logits.width = kLayers.back();
  result.logits.height = batch;
  result.logits.values.reserve(batch * kLayers.back());
  for (std::size_t s = 0; s < batch; ++s) {
    std::vector<float> x(kLayers.front());
    for (auto& v : x) v = gen.uniform(0.0f, 1.0f);
    for (std::size_t l = 0; l < net.size(); ++l) x = apply(net[l], x, l + 1 < net.size(), mul);
    result.logits.values.insert(result.logits.values.end(), x.begin(), x.end());
    // Softmax with native exp and division.
    float peak = x[0];
    for (const float v : x) peak = std::max(peak, v);
    float total = 0.0f;
    for (auto& v : x) total += (v = std::exp(v - peak));
    for (const float v : x) result.probabilities.push_back(v / total);
  }
  return result;
}

}  // namespace fixposit::kernels
