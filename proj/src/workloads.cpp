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

#include "fixposit/workloads.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "fixposit/image.hpp"
#include "fixposit/multiplier.hpp"
#include "kernels.hpp"

namespace fixposit {
namespace {

enum class Quality { MeanRelative, Rmse, Image, Classifier };

struct WorkloadInfo {
  std::string_view name;
  std::size_t default_size;
  std::size_t min_size;
  Quality quality;
};

constexpr WorkloadInfo kWorkloads[] = {
    {"axpby", 200, 1, Quality::MeanRelative},
    {"dot", 200, 1, Quality::MeanRelative},
    {"gemm", 200, 1, Quality::MeanRelative},
    {"trsv", 200, 1, Quality::MeanRelative},
    {"blackscholes", 4096, 1, Quality::MeanRelative},
    {"fft", 1024, 2, Quality::MeanRelative},
    {"kmeans", 1024, 8, Quality::Rmse},
    {"sobel", 256, 3, Quality::Image},
    {"mlp_forward", 200, 1, Quality::Classifier},
};

const WorkloadInfo& lookup(std::string_view name) {
  for (const auto& w : kWorkloads) {
    if (w.name == name) return w;
  }
  throw std::invalid_argument("unknown workload '" + std::string(name) + "'");
}

std::size_t argmax(std::span<const double> row) {
  return static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin());
}

}  // namespace

float native_mul(float a, float b) { return a * b; }

float Multiplier::operator()(float a, float b) {
  ++count_;
  if (trace_) trace_->push_back({std::bit_cast<std::uint32_t>(a), std::bit_cast<std::uint32_t>(b)});
  return fn_(a, b);
}

std::vector<std::string> workload_names() {
  std::vector<std::string> names;
  for (const auto& w : kWorkloads) names.emplace_back(w.name);
  return names;
}

bool is_workload(std::string_view name) {
  return std::any_of(std::begin(kWorkloads), std::end(kWorkloads),
                     [&](const WorkloadInfo& w) { return w.name == name; });
}

std::size_t default_size(std::string_view name) { return lookup(name).default_size; }

KernelOutput run_kernel(std::string_view name, std::size_t size, std::uint64_t seed,
                        const Grid* image, Multiplier& mul) {
  const WorkloadInfo& info = lookup(name);
  if (size == 0) size = info.default_size;
  if (size < info.min_size) {
    throw std::invalid_argument(std::string(name) + " needs size >= " +
                                std::to_string(info.min_size));
  }
  if (name == "axpby") return kernels::axpby(size, seed, mul);
  if (name == "dot") return kernels::dot(size, seed, mul);
  if (name == "gemm") return kernels::gemm(size, seed, mul);
  if (name == "trsv") return kernels::trsv(size, seed, mul);
  if (name == "blackscholes") return kernels::blackscholes(size, seed, mul);
  if (name == "fft") return kernels::fft(size, seed, mul);
  if (name == "kmeans") return kernels::kmeans(size, seed, mul);
  if (name == "sobel") return kernels::sobel(image ? *image : synthetic_image(size, size), mul);
  return kernels::mlp_forward(size, seed, mul).logits;
}

WorkloadResult run_workload_with(const WorkloadConfig& cfg, const MulFunction& fn) {
  const WorkloadInfo& info = lookup(cfg.name);
  WorkloadResult result;
  result.workload = cfg.name;
  result.fmt = cfg.fmt;
  result.size = cfg.size ? cfg.size : info.default_size;
  result.seed = cfg.seed;

  Grid synthetic;
  const Grid* image = cfg.image;
  if (info.quality == Quality::Image && image == nullptr) {
    synthetic = synthetic_image(result.size, result.size);
    image = &synthetic;
  }

  Multiplier reference(native_mul);
  Multiplier measured(fn, cfg.trace);
  KernelOutput ref_out;
  KernelOutput sub_out;
  std::vector<double> ref_prob;
  std::vector<double> sub_prob;
  double elapsed = 0.0;
  if (info.quality == Quality::Classifier) {
    auto r = kernels::mlp_forward(result.size, cfg.seed, reference);
    const auto start = std::chrono::steady_clock::now();
    auto s = kernels::mlp_forward(result.size, cfg.seed, measured);
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ref_out = std::move(r.logits);
    sub_out = std::move(s.logits);
    ref_prob = std::move(r.probabilities);
    sub_prob = std::move(s.probabilities);
  } else {
    ref_out = run_kernel(cfg.name, result.size, cfg.seed, image, reference);
    const auto start = std::chrono::steady_clock::now();
    sub_out = run_kernel(cfg.name, result.size, cfg.seed, image, measured);
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  if (reference.count() != measured.count()) {
    throw std::logic_error("multiplication count differs between reference and substituted run");
  }
  result.multiplications = measured.count();
  result.elapsed_s = elapsed;
  result.errors = compare_outputs(ref_out.values, sub_out.values);

  switch (info.quality) {
    case Quality::MeanRelative:
      result.metric = "mean_rel_err_pct";
      result.quality = result.errors.mean_rel_err_pct;
      result.quality_loss = result.quality;
      break;
    case Quality::Rmse:
      result.metric = "rmse";
      result.quality = result.errors.rmse;
      result.quality_loss = result.quality;
      break;
    case Quality::Image: {
      result.metric = "rmse";
      result.quality = result.errors.rmse;
      result.quality_loss = result.quality;
      const Grid ref_grid{ref_out.width, ref_out.height, ref_out.values};
      const Grid sub_grid{sub_out.width, sub_out.height, sub_out.values};
      result.errors.psnr_db = psnr_db(ref_grid, sub_grid, 255.0);
      if (cfg.image_out) *cfg.image_out = sub_grid;
      break;
    }
    case Quality::Classifier: {
      const std::size_t classes = ref_out.width;
      std::size_t agree = 0;
      for (std::size_t row = 0; row < ref_out.height; ++row) {
        const std::span<const double> r(ref_prob.data() + row * classes, classes);
        const std::span<const double> s(sub_prob.data() + row * classes, classes);
        if (argmax(r) == argmax(s)) ++agree;
      }
      result.metric = "top1_agreement_pct";
      result.agreement_pct =
          ref_out.height ? 100.0 * static_cast<double>(agree) / static_cast<double>(ref_out.height)
                         : 100.0;
      result.quality = *result.agreement_pct;
      result.quality_loss = 100.0 - result.quality;
      break;
    }
  }
  return result;
}

WorkloadResult run_workload(const WorkloadConfig& cfg) {
  if (!cfg.fmt) return run_workload_with(cfg, native_mul);
  const SubstitutedMultiply sub(*cfg.fmt);
  return run_workload_with(cfg, [sub](float a, float b) { return sub(a, b); });
}

}  // namespace fixposit
