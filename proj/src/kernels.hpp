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

// Kernels behind run_workload. Each kernel regenerates its inputs from
// (size, seed), so two calls with different multipliers see identical data.

#ifndef FIXPOSIT_SRC_KERNELS_HPP_
#define FIXPOSIT_SRC_KERNELS_HPP_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "fixposit/workloads.hpp"

namespace fixposit::kernels {

class InputGenerator {
 public:
  InputGenerator(std::string_view stream, std::uint64_t seed);

  /// Uniform binary32 in [lo, hi).
  float uniform(float lo, float hi);
  std::uint64_t next() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

KernelOutput axpby(std::size_t n, std::uint64_t seed, Multiplier& mul);
KernelOutput dot(std::size_t n, std::uint64_t seed, Multiplier& mul);
KernelOutput gemm(std::size_t n, std::uint64_t seed, Multiplier& mul);
KernelOutput trsv(std::size_t n, std::uint64_t seed, Multiplier& mul);

KernelOutput blackscholes(std::size_t options, std::uint64_t seed, Multiplier& mul);
KernelOutput fft(std::size_t n, std::uint64_t seed, Multiplier& mul);
KernelOutput kmeans(std::size_t points, std::uint64_t seed, Multiplier& mul);
KernelOutput sobel(const Grid& image, Multiplier& mul);

struct MlpOutput {
  KernelOutput logits;  // batch x 10, row-major
  std::vector<double> probabilities;  // softmax of each logits row
  std::size_t classes = 0;
};
MlpOutput mlp_forward(std::size_t batch, std::uint64_t seed, Multiplier& mul);

}  // namespace fixposit::kernels

#endif  // FIXPOSIT_SRC_KERNELS_HPP_
