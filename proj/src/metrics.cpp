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

#include "fixposit/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "fixposit/codec.hpp"
#include "fixposit/posit.hpp"

namespace fixposit {

std::optional<double> relative_error_pct(double x, double x_prime) {
  if (x == 0.0 || !std::isfinite(x)) return std::nullopt;
  return 100.0 * std::fabs(x - x_prime) / std::fabs(x);
}

double rmse(std::span<const double> ref, std::span<const double> approx) {
  if (ref.size() != approx.size()) throw std::invalid_argument("rmse: length mismatch");
  if (ref.empty()) throw std::invalid_argument("rmse: empty input");
  double sum = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const double d = ref[i] - approx[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(ref.size()));
}

double psnr_db(std::span<const double> ref, std::span<const double> approx, double peak) {
  if (ref.size() != approx.size()) throw std::invalid_argument("psnr: size mismatch");
  if (ref.empty()) throw std::invalid_argument("psnr: empty input");
  if (!(peak > 0.0)) throw std::invalid_argument("psnr: peak must be positive");
  const double e = rmse(ref, approx);
  const double mse = e * e;
  if (mse == 0.0) return kPsnrCapDb;
  return std::min(kPsnrCapDb, 10.0 * std::log10(peak * peak / mse));
}

double psnr_db(const Grid& ref, const Grid& approx, double peak) {
  if (ref.width != approx.width || ref.height != approx.height) {
    throw std::invalid_argument("psnr: image dimensions differ");
  }
  return psnr_db(std::span<const double>(ref.values), std::span<const double>(approx.values),
                 peak);
}

void ErrorAccumulator::add(double reference, double approx) {
  if (const auto pct = relative_error_pct(reference, approx)) {
    ++count_;
    sum_pct_ += *pct;
    max_pct_ = std::max(max_pct_, *pct);
  } else {
    ++skipped_;
  }
  if (std::isfinite(reference)) {
    const double d = reference - approx;
    sum_sq_ += d * d;
    ++sq_count_;
  }
}

void ErrorAccumulator::merge(const ErrorAccumulator& other) {
  count_ += other.count_;
  skipped_ += other.skipped_;
  sq_count_ += other.sq_count_;
  max_pct_ = std::max(max_pct_, other.max_pct_);
  sum_pct_ += other.sum_pct_;
  sum_sq_ += other.sum_sq_;
}

ErrorReport ErrorAccumulator::report() const {
  ErrorReport r;
  r.count = count_;
  r.skipped = skipped_;
  r.max_rel_err_pct = max_pct_;
  r.mean_rel_err_pct = count_ ? sum_pct_ / static_cast<double>(count_) : 0.0;
  r.rmse = sq_count_ ? std::sqrt(sum_sq_ / static_cast<double>(sq_count_)) : 0.0;
  return r;
}

ErrorReport compare_outputs(std::span<const double> ref, std::span<const double> approx) {
  if (ref.size() != approx.size()) throw std::invalid_argument("output length mismatch");
  ErrorAccumulator acc;
  for (std::size_t i = 0; i < ref.size(); ++i) acc.add(ref[i], approx[i]);
  return acc.report();
}

std::string_view to_string(SampleDistribution dist) {
  return dist == SampleDistribution::LogUniform ? "log-uniform" : "uniform-real";
}

std::optional<SampleDistribution> parse_distribution(std::string_view name) {
  if (name == "log-uniform") return SampleDistribution::LogUniform;
  if (name == "uniform-real") return SampleDistribution::UniformReal;
  return std::nullopt;
}

std::vector<std::uint32_t> SampleStream::block(std::size_t block, std::size_t count) const {
  std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<std::uint32_t> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::uint64_t r = rng();
    if (dist_ == SampleDistribution::LogUniform) {
      // 254 binades: biased exponents 1..254.
      const auto biased = static_cast<std::uint32_t>(1 + (r >> 32) % 254);
      const auto mantissa = static_cast<std::uint32_t>(r & 0x7FFFFFu);
      out.push_back((biased << 23) | mantissa);
    } else {
      const double u = static_cast<double>(r >> 11) * 0x1p-53;
      const auto x = static_cast<float>(0x1p-126 + u * (0x1p127 - 0x1p-126));
      if (x < 0x1p-126f) continue;
      out.push_back(std::bit_cast<std::uint32_t>(x));
    }
  }
  return out;
}

namespace {

template <class Convert>
ErrorReport run_sweep(std::size_t sample_count, std::uint64_t seed, SampleDistribution dist,
                      unsigned threads, Convert convert) {
  if (sample_count == 0) throw std::invalid_argument("sample count must be at least 1");
  const SampleStream stream(seed, dist);
  const std::size_t blocks = (sample_count + SampleStream::kBlockSize - 1) / SampleStream::kBlockSize;
  std::vector<ErrorAccumulator> partial(blocks);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t b = first; b < blocks; b += stride) {
      const std::size_t begin = b * SampleStream::kBlockSize;
      const std::size_t count = std::min(SampleStream::kBlockSize, sample_count - begin);
      for (const std::uint32_t bits : stream.block(b, count)) {
        partial[b].add(static_cast<double>(std::bit_cast<float>(bits)), convert(bits));
      }
    }
  };
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(blocks));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }
  ErrorAccumulator total;
  for (const auto& p : partial) total.merge(p);
  return total.report();
}

}  // namespace

ErrorReport sweep_conversion_error(const FixedPositFormat& fmt, std::size_t sample_count,
                                   std::uint64_t seed, SampleDistribution dist,
                                   unsigned threads) {
  return run_sweep(sample_count, seed, dist, threads,
                   [&](std::uint32_t bits) { return to_binary64(from_binary32(bits, fmt)); });
}

ErrorReport sweep_conversion_error(const PositFormat& fmt, std::size_t sample_count,
                                   std::uint64_t seed, SampleDistribution dist,
                                   unsigned threads) {
  return run_sweep(sample_count, seed, dist, threads, [&](std::uint32_t bits) {
    return posit_to_binary64(posit_from_binary32(bits, fmt));
  });
}

}  // namespace fixposit
