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

// Approximate-computing kernels: option pricing, FFT, k-means and Sobel.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "kernels.hpp"

namespace fixposit::kernels {
namespace {

// Polynomial approximation of the standard normal CDF used by the PARSEC
// and AxBench pricing kernels.
float cndf(float input, Multiplier& mul) {
  constexpr float kInvSqrt2Pi = 0.39894228040143270286f;
  bool negative = false;
  float x = input;
  if (x < 0.0f) {
    x = -x;
    negative = true;
  }
  const float exp_values = std::exp(mul(mul(-0.5f, x), x));
  const float n_prime = mul(exp_values, kInvSqrt2Pi);

  float k2 = mul(0.2316419f, x);
  k2 = 1.0f + k2;
  k2 = 1.0f / k2;
  const float k2_2 = mul(k2, k2);
  const float k2_3 = mul(k2_2, k2);
  const float k2_4 = mul(k2_3, k2);
  const float k2_5 = mul(k2_4, k2);

  float local1 = mul(k2, 0.319381530f);
  float local2 = mul(k2_2, -0.356563782f);
  float local3 = mul(k2_3, 1.781477937f);
  local2 += local3;
  local3 = mul(k2_4, -1.821255978f);
  local2 += local3;
  local3 = mul(k2_5, 1.330274429f);
  local2 += local3;

  local1 = local2 + local1;
  float result = 1.0f - mul(local1, n_prime);
  if (negative) result = 1.0f - result;
  return result;
}

float black_scholes(float spot, float strike, float rate, float volatility, float time,
                    bool call, Multiplier& mul) {
  const float sqrt_time = std::sqrt(time);
  const float log_term = std::log(spot / strike);
  float power_term = mul(volatility, volatility);
  power_term = mul(power_term, 0.5f);
  float d1 = rate + power_term;
  d1 = mul(d1, time);
  d1 = d1 + log_term;
  const float den = mul(volatility, sqrt_time);
  d1 = d1 / den;
  const float d2 = d1 - den;

  const float nd1 = cndf(d1, mul);
  const float nd2 = cndf(d2, mul);
  const float future_value = mul(strike, std::exp(mul(-rate, time)));
  if (call) return mul(spot, nd1) - mul(future_value, nd2);
  return mul(future_value, 1.0f - nd2) - mul(spot, 1.0f - nd1);
}

}  // namespace

KernelOutput blackscholes(std::size_t options, std::uint64_t seed, Multiplier& mul) {
  InputGenerator gen("blackscholes", seed);
  std::vector<double> prices;
  prices.reserve(options);
  for (std::size_t i = 0; i < options; ++i) {
    const float spot = gen.uniform(10.0f, 100.0f);
    const float strike = spot * gen.uniform(0.8f, 1.2f);
    const float rate = gen.uniform(0.01f, 0.1f);
    const float volatility = gen.uniform(0.1f, 0.5f);
    const float time = gen.uniform(0.25f, 2.0f);
    prices.push_back(black_scholes(spot, strike, rate, volatility, time, i % 2 == 0, mul));
  }
  return KernelOutput{std::move(prices), 0, 0};
}

KernelOutput fft(std::size_t n, std::uint64_t seed, Multiplier& mul) {
  if (n < 2 || (n & (n - 1)) != 0) throw std::invalid_argument("fft length must be a power of two");
  InputGenerator gen("fft", seed);
  std::vector<float> re(n);
  std::vector<float> im(n);
  for (std::size_t i = 0; i < n; ++i) {
    re[i] = gen.uniform(-0.5f, 0.5f);
    im[i] = gen.uniform(-0.5f, 0.5f);
  }

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) {
      std::swap(re[i], re[j]);
      std::swap(im[i], im[j]);
    }
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    for (std::size_t k = 0; k < half; ++k) {
      // Twiddles are computed in binary64 and rounded once, outside the
      // substituted multiplier.
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) /
                           static_cast<double>(len);
      const auto wr = static_cast<float>(std::cos(angle));
      const auto wi = static_cast<float>(std::sin(angle));
      for (std::size_t start = 0; start < n; start += len) {
        const std::size_t top = start + k;
        const std::size_t bottom = top + half;
        const float tr = mul(wr, re[bottom]) - mul(wi, im[bottom]);
        const float ti = mul(wr, im[bottom]) + mul(wi, re[bottom]);
        re[bottom] = re[top] - tr;
        im[bottom] = im[top] - ti;
        re[top] = re[top] + tr;
        im[top] = im[top] + ti;
      }
    }
  }

  KernelOutput out;
  out.values.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out.values.push_back(re[i]);
    out.values.push_back(im[i]);
  }
  return out;
}

KernelOutput kmeans(std::size_t points, std::uint64_t seed, Multiplier& mul) {
  constexpr std::size_t kDims = 3;
  constexpr std::size_t kClusters = 8;
  constexpr int kIterations = 10;
  if (points < kClusters) throw std::invalid_argument("kmeans needs at least 8 points");

  InputGenerator gen("kmeans", seed);
  std::vector<float> data(points * kDims);
  for (auto& v : data) v = gen.uniform(0.0f, 1.0f);

  // Seeded distinct initial centres.
  std::vector<std::size_t> picks;
  while (picks.size() < kClusters) {
    const std::size_t p = gen.next() % points;
    if (std::find(picks.begin(), picks.end(), p) == picks.end()) picks.push_back(p);
  }
  std::vector<float> centers(kClusters * kDims);
  for (std::size_t c = 0; c < kClusters; ++c) {
    std::copy_n(data.begin() + static_cast<std::ptrdiff_t>(picks[c] * kDims), kDims,
                centers.begin() + static_cast<std::ptrdiff_t>(c * kDims));
  }

  std::vector<std::size_t> assignment(points, 0);
  for (int iter = 0; iter < kIterations; ++iter) {
    for (std::size_t p = 0; p < points; ++p) {
      float best = 0.0f;
      std::size_t best_c = 0;
      for (std::size_t c = 0; c < kClusters; ++c) {
        float dist = 0.0f;
        for (std::size_t d = 0; d < kDims; ++d) {
          const float diff = data[p * kDims + d] - centers[c * kDims + d];
          dist += mul(diff, diff);
        }
        // Strict comparison keeps the lowest index on ties.
        if (c == 0 || dist < best) {
          best = dist;
          best_c = c;
        }
      }
      assignment[p] = best_c;
    }
    std::vector<float> sums(kClusters * kDims, 0.0f);
    std::vector<std::size_t> counts(kClusters, 0);
    for (std::size_t p = 0; p < points; ++p) {
      ++counts[assignment[p]];
      for (std::size_t d = 0; d < kDims; ++d) {
        sums[assignment[p] * kDims + d] += data[p * kDims + d];
      }
    }
    for (std::size_t c = 0; c < kClusters; ++c) {
      if (counts[c] == 0) continue;  // empty cluster keeps its centre
      for (std::size_t d = 0; d < kDims; ++d) {
        centers[c * kDims + d] = sums[c * kDims + d] / static_cast<float>(counts[c]);
      }
    }
  }
  return KernelOutput{std::vector<double>(centers.begin(), centers.end()), kDims, kClusters};
}

KernelOutput sobel(const Grid& image, Multiplier& mul) {
  static constexpr float kX[9] = {-1, 0, 1, -2, 0, 2, -1, 0, 1};
  static constexpr float kY[9] = {-1, -2, -1, 0, 0, 0, 1, 2, 1};
  const std::size_t w = image.width;
  const std::size_t h = image.height;
  if (w < 3 || h < 3 || image.values.size() != w * h) {
    throw std::invalid_argument("sobel needs an image of at least 3x3 pixels");
  }
  KernelOutput out{std::vector<double>(w * h, 0.0), w, h};
  for (std::size_t y = 1; y + 1 < h; ++y) {
    for (std::size_t x = 1; x + 1 < w; ++x) {
      float gx = 0.0f;
      float gy = 0.0f;
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t i = 0; i < 3; ++i) {
          const auto p = static_cast<float>(image.at(x + i - 1, y + j - 1));
          gx += mul(kX[j * 3 + i], p);
          gy += mul(kY[j * 3 + i], p);
        }
      }
      const float magnitude = std::sqrt(mul(gx, gx) + mul(gy, gy));
      out.values[y * w + x] = std::min(magnitude, 255.0f);
    }
  }
  return out;
}

}  // namespace fixposit::kernels
