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

#ifndef FIXPOSIT_WORKLOADS_HPP_
#define FIXPOSIT_WORKLOADS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fixposit/format.hpp"
#include "fixposit/metrics.hpp"

namespace fixposit {

/// The multiplication used for every scalar product inside a kernel.
using MulFunction = std::function<float(float, float)>;

/// Native binary32 multiplication.
float native_mul(float a, float b);

/// Operands of one multiplication as binary32 bit patterns.
struct OperandPair {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  friend bool operator==(const OperandPair&, const OperandPair&) = default;
};

using OperandTrace = std::vector<OperandPair>;

/// Trace files are a headerless stream of 8-byte little-endian records:
/// the 4-byte pattern of a followed by that of b.
void write_trace(std::ostream& out, std::span<const OperandPair> trace);
OperandTrace read_trace(std::istream& in);

/// Concatenates `chunks` runs of `chunk_len` consecutive pairs, each starting
/// at a seeded uniform offset. Chunks may overlap.
OperandTrace trace_sample(std::span<const OperandPair> trace, std::size_t chunks,
                          std::size_t chunk_len, std::uint64_t seed);

/// Counting (and optionally tracing) front end to a MulFunction.
class Multiplier {
 public:
  explicit Multiplier(MulFunction fn, OperandTrace* trace = nullptr)
      : fn_(std::move(fn)), trace_(trace) {}

  float operator()(float a, float b);

  std::uint64_t count() const { return count_; }

 private:
  MulFunction fn_;
  OperandTrace* trace_;
  std::uint64_t count_ = 0;
};

/// Output of a single kernel execution. Image kernels set width/height.
struct KernelOutput {
  std::vector<double> values;
  std::size_t width = 0;
  std::size_t height = 0;
};

struct WorkloadConfig {
  std::string name;
  std::optional<FixedPositFormat> fmt;  // nullopt runs the binary32 reference
  std::size_t size = 0;                 // 0 selects the workload default
  std::uint64_t seed = 0;
  OperandTrace* trace = nullptr;  // receives the operands of the measured run
  const Grid* image = nullptr;    // sobel input; synthetic image when null
  Grid* image_out = nullptr;      // sobel output of the measured run
};

struct WorkloadResult {
  std::string workload;
  std::optional<FixedPositFormat> fmt;
  std::size_t size = 0;
  std::uint64_t seed = 0;
  std::string metric;  // "mean_rel_err_pct", "rmse" or "top1_agreement_pct"
  double quality = 0.0;
  /// Quality loss relative to the reference run; 0 means no loss.
  double quality_loss = 0.0;
  ErrorReport errors;
  std::optional<double> agreement_pct;
  std::uint64_t multiplications = 0;
  double elapsed_s = 0.0;
};

std::vector<std::string> workload_names();
bool is_workload(std::string_view name);
std::size_t default_size(std::string_view name);

/// Runs the named kernel with native multiplication and again with every
/// multiplication routed through `fn`, both on the same seeded inputs, and
/// scores the second run against the first.
WorkloadResult run_workload_with(const WorkloadConfig& cfg, const MulFunction& fn);

/// run_workload_with using the fixed-posit substitution for cfg.fmt, or
/// native multiplication when cfg.fmt is empty.
WorkloadResult run_workload(const WorkloadConfig& cfg);

/// Kernel entry point, exposed for tests that drive kernels directly.
KernelOutput run_kernel(std::string_view name, std::size_t size, std::uint64_t seed,
                        const Grid* image, Multiplier& mul);

}  // namespace fixposit

#endif  // FIXPOSIT_WORKLOADS_HPP_
