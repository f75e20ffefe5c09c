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

#ifndef FIXPOSIT_METRICS_HPP_
#define FIXPOSIT_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fixposit/format.hpp"

namespace fixposit {

/// 100 * |x - x'| / |x|, or nullopt when the reference x is zero or not
/// finite and the sample must be excluded.
std::optional<double> relative_error_pct(double x, double x_prime);

/// Root mean squared difference; throws std::invalid_argument on empty or
/// mismatched inputs.
double rmse(std::span<const double> ref, std::span<const double> approx);

inline constexpr double kPsnrCapDb = 100.0;

/// Row-major grid of samples, used for images.
struct Grid {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> values;

  double at(std::size_t x, std::size_t y) const { return values[y * width + x]; }
};

/// 10 * log10(peak^2 / MSE), capped at 100 dB (returned for MSE = 0).
double psnr_db(const Grid& ref, const Grid& approx, double peak = 255.0);
double psnr_db(std::span<const double> ref, std::span<const double> approx, double peak = 255.0);

struct ErrorReport {
  std::size_t count = 0;    // samples contributing to relative error
  std::size_t skipped = 0;  // reference zero or non-finite
  double max_rel_err_pct = 0.0;
  double mean_rel_err_pct = 0.0;
  double rmse = 0.0;
  std::optional<double> psnr_db;
};

/// Streaming accumulator for ErrorReport. Merging is order-independent for
/// the max and count fields; sums are merged in caller order, so callers that
/// need bitwise determinism merge partitions in a fixed order.
class ErrorAccumulator {
 public:
  void add(double reference, double approx);
  void merge(const ErrorAccumulator& other);
  ErrorReport report() const;

 private:
  std::size_t count_ = 0;
  std::size_t skipped_ = 0;
  std::size_t sq_count_ = 0;
  double max_pct_ = 0.0;
  double sum_pct_ = 0.0;
  double sum_sq_ = 0.0;
};

/// Elementwise report over two output vectors.
ErrorReport compare_outputs(std::span<const double> ref, std::span<const double> approx);

enum class SampleDistribution {
  /// Uniform unbiased exponent in [-126, 127] and uniform 23-bit fraction.
  LogUniform,
  /// Uniform real value in [2^-126, 2^127), rounded to binary32.
  UniformReal,
};

std::string_view to_string(SampleDistribution dist);
std::optional<SampleDistribution> parse_distribution(std::string_view name);

/// Draws the i-th binary32 sample of a sweep. Samples are grouped in blocks
/// with independently seeded generators so any partition of the index range
/// reproduces the same sequence.
class SampleStream {
 public:
  static constexpr std::size_t kBlockSize = 4096;

  SampleStream(std::uint64_t seed, SampleDistribution dist) : seed_(seed), dist_(dist) {}

  /// Samples [block * kBlockSize, block * kBlockSize + count).
  std::vector<std::uint32_t> block(std::size_t block, std::size_t count) const;

 private:
  std::uint64_t seed_;
  SampleDistribution dist_;
};

/// Converts `sample_count` binary32 samples into `fmt` and back, reporting
/// relative error against the binary32 input. Deterministic for a given seed
/// regardless of `threads`.
ErrorReport sweep_conversion_error(const FixedPositFormat& fmt, std::size_t sample_count,
                                   std::uint64_t seed,
                                   SampleDistribution dist = SampleDistribution::LogUniform,
                                   unsigned threads = 1);

/// The same sweep through a standard posit format.
ErrorReport sweep_conversion_error(const PositFormat& fmt, std::size_t sample_count,
                                   std::uint64_t seed,
                                   SampleDistribution dist = SampleDistribution::LogUniform,
                                   unsigned threads = 1);

}  // namespace fixposit

#endif  // FIXPOSIT_METRICS_HPP_
