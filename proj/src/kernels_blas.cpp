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

// Level-1/2/3 BLAS style kernels. Inputs follow the OpenBLAS benchmark
// drivers: uniform values in [-0.5, 0.5).

#include <cmath>
#include <cstdint>
#include <vector>

#include "kernels.hpp"

namespace fixposit::kernels {
namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::vector<float> random_vector(InputGenerator& gen, std::size_t n) {
  std::vector<float> v(n);
  for (auto& x : v) x = gen.uniform(-0.5f, 0.5f);
  return v;
}

KernelOutput widen(const std::vector<float>& v) {
  return KernelOutput{std::vector<double>(v.begin(), v.end()), 0, 0};
}

}  // namespace

InputGenerator::InputGenerator(std::string_view stream, std::uint64_t seed) {
  const std::uint64_t h = fnv1a(stream);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  rng_.seed(seq);
}

float InputGenerator::uniform(float lo, float hi) {
  const double u = static_cast<double>(rng_() >> 40) * 0x1p-24;
  return static_cast<float>(lo + (static_cast<double>(hi) - lo) * u);
}

KernelOutput axpby(std::size_t n, std::uint64_t seed, Multiplier& mul) {
  InputGenerator gen("axpby", seed);
  const float alpha = gen.uniform(0.5f, 2.0f);
  const float beta = gen.uniform(0.5f, 2.0f);
  const std::vector<float> x = random_vector(gen, n);
  std::vector<float> y = random_vector(gen, n);
  for (std::size_t i = 0; i < n; ++i) y[i] = mul(alpha, x[i]) + mul(beta, y[i]);
  return widen(y);
}

// n independent length-n dot products over fresh vector pairs.
KernelOutput dot(std::size_t n, std::uint64_t seed, Multiplier& mul) {
  InputGenerator gen("dot", seed);
  std::vector<float> results(n);
  for (auto& r : results) {
    const std::vector<float> x = random_vector(gen, n);
    const std::vector<float> y = random_vector(gen, n);
    float acc = 0.0f;
    for (std::size_t i = 0; i < n; ++i) acc += mul(x[i], y[i]);
    r = acc;
  }
  return widen(results);
}

KernelOutput gemm(std::size_t n, std::uint64_t seed, Multiplier& mul) {
  InputGenerator gen("gemm", seed);
  const float alpha = gen.uniform(0.5f, 2.0f);
  const float beta = gen.uniform(0.5f, 2.0f);
  const std::vector<float> a = random_vector(gen, n * n);
  const std::vector<float> b = random_vector(gen, n * n);
  std::vector<float> c = random_vector(gen, n * n);
  // Row-major C = alpha * A * B + beta * C, i-k-j loop order.
  std::vector<float> ab(n * n, 0.0f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const float aik = a[i * n + k];
      for (std::size_t j = 0; j < n; ++j) ab[i * n + j] += mul(aik, b[k * n + j]);
    }
  }
  for (std::size_t i = 0; i < n * n; ++i) c[i] = mul(alpha, ab[i]) + mul(beta, c[i]);
  return widen(c);
}

KernelOutput trsv(std::size_t n, std::uint64_t seed, Multiplier& mul) {
  InputGenerator gen("trsv", seed);
  // Random lower triangular matrices are exponentially ill conditioned; a
  // diagonal of about sqrt(n) / 2 keeps forward substitution stable while
  // the off-diagonal products still shape the solution.
  std::vector<float> l(n * n, 0.0f);
  const auto diag = static_cast<float>(0.5 * std::sqrt(static_cast<double>(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) l[i * n + j] = gen.uniform(-0.5f, 0.5f);
    l[i * n + i] = diag + gen.uniform(0.5f, 1.5f);
  }
  std::vector<float> x = random_vector(gen, n);
  for (std::size_t i = 0; i < n; ++i) {
    float acc = x[i];
    for (std::size_t j = 0; j < i; ++j) acc -= mul(l[i * n + j], x[j]);
    x[i] = acc / l[i * n + i];
  }
  return widen(x);
}

}  // namespace fixposit::kernels
