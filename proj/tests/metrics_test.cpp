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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace fixposit {
namespace {

FixedPositFormat F(int n, int es, int rs) { return FixedPositFormat::validate(n, es, rs); }

TEST(MetricsTest, RelativeError) {
  EXPECT_EQ(*relative_error_pct(2.0, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(*relative_error_pct(1.0, 1.0625), 6.25);
  EXPECT_DOUBLE_EQ(*relative_error_pct(-4.0, -3.0), 25.0);
  EXPECT_FALSE(relative_error_pct(0.0, 1.0));
  EXPECT_FALSE(relative_error_pct(INFINITY, 1.0));
  EXPECT_FALSE(relative_error_pct(NAN, 1.0));
}

TEST(MetricsTest, RelativeErrorIsScaleInvariant) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    const double xp = u(rng);
    for (const double c : {0.25, -8.0, 1024.0}) {
      EXPECT_NEAR(*relative_error_pct(c * x, c * xp), *relative_error_pct(x, xp),
                  1e-12 * *relative_error_pct(x, xp) + 1e-12);
    }
  }
}

TEST(MetricsTest, Rmse) {
  const std::vector<double> a = {1.0, 2.0, 3.0};
  EXPECT_EQ(rmse(a, a), 0.0);
  EXPECT_NEAR(rmse(std::vector<double>{0, 0}, std::vector<double>{3, 4}), std::sqrt(12.5), 1e-12);
  EXPECT_EQ(rmse(std::vector<double>{1.0}, std::vector<double>{1.5}), 0.5);
  EXPECT_THROW(rmse(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}),
               std::invalid_argument);
  EXPECT_THROW(rmse(std::vector<double>{}, std::vector<double>{}), std::invalid_argument);
}

TEST(MetricsTest, Psnr) {
  Grid a{2, 2, {0, 10, 20, 30}};
  EXPECT_EQ(psnr_db(a, a), 100.0);
  Grid b{2, 2, {1, 11, 19, 29}};  // MSE = 1
  EXPECT_NEAR(psnr_db(a, b), 20.0 * std::log10(255.0), 1e-9);
  EXPECT_NEAR(psnr_db(a, b), 48.13, 0.005);
  Grid black{1, 1, {0}};
  Grid white{1, 1, {255}};
  EXPECT_NEAR(psnr_db(black, white), 0.0, 1e-12);
  Grid wide{4, 1, {0, 10, 20, 30}};
  EXPECT_THROW(psnr_db(a, wide), std::invalid_argument);
  EXPECT_THROW(psnr_db(a, a, 0.0), std::invalid_argument);
}

TEST(MetricsTest, PsnrCapMatchesZeroRmse) {
  Grid a{3, 1, {1, 2, 3}};
  Grid b{3, 1, {1, 2, 3.0000001}};
  EXPECT_EQ(rmse(a.values, a.values), 0.0);
  EXPECT_EQ(psnr_db(a, a), kPsnrCapDb);
  EXPECT_GT(rmse(a.values, b.values), 0.0);
  EXPECT_LE(psnr_db(a, b), kPsnrCapDb);
}

TEST(MetricsTest, AccumulatorSkipsZeroReferences) {
  ErrorAccumulator acc;
  acc.add(1.0, 1.5);
  acc.add(0.0, 0.25);
  acc.add(2.0, 2.0);
  const ErrorReport r = acc.report();
  EXPECT_EQ(r.count, 2u);
  EXPECT_EQ(r.skipped, 1u);
  EXPECT_DOUBLE_EQ(r.max_rel_err_pct, 50.0);
  EXPECT_DOUBLE_EQ(r.mean_rel_err_pct, 25.0);
  EXPECT_DOUBLE_EQ(r.rmse, std::sqrt((0.25 + 0.0625) / 3.0));
  EXPECT_GE(r.max_rel_err_pct, r.mean_rel_err_pct);
}

TEST(MetricsTest, AccumulatorMergeMatchesSinglePass) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1, 1);
  ErrorAccumulator whole;
  ErrorAccumulator left;
  ErrorAccumulator right;
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    const double y = x + u(rng) * 1e-3;
    whole.add(x, y);
    (i < 400 ? left : right).add(x, y);
  }
  left.merge(right);
  EXPECT_EQ(left.report().count, whole.report().count);
  EXPECT_EQ(left.report().max_rel_err_pct, whole.report().max_rel_err_pct);
  EXPECT_NEAR(left.report().mean_rel_err_pct, whole.report().mean_rel_err_pct, 1e-9);
}

TEST(MetricsTest, DistributionNames) {
  EXPECT_EQ(parse_distribution("log-uniform"), SampleDistribution::LogUniform);
  EXPECT_EQ(parse_distribution("uniform-real"), SampleDistribution::UniformReal);
  EXPECT_FALSE(parse_distribution("gaussian"));
  EXPECT_EQ(to_string(SampleDistribution::UniformReal), "uniform-real");
}

TEST(MetricsTest, SamplesAreNormalBinary32InRange) {
  for (const auto dist : {SampleDistribution::LogUniform, SampleDistribution::UniformReal}) {
    const SampleStream stream(99, dist);
    for (const std::uint32_t bits : stream.block(0, 4096)) {
      const std::uint32_t biased = (bits >> 23) & 0xFF;
      ASSERT_GE(biased, 1u);
      ASSERT_LE(biased, 254u);
      ASSERT_EQ(bits >> 31, 0u);
    }
  }
}

TEST(MetricsTest, SweepIsExactForTwentyThreeFractionBits) {
  for (const auto& fmt : {F(32, 6, 2), F(32, 7, 1)}) {
    const ErrorReport r = sweep_conversion_error(fmt, 20000, 7);
    EXPECT_EQ(r.max_rel_err_pct, 0.0);
    EXPECT_EQ(r.count, 20000u);
    EXPECT_EQ(r.skipped, 0u);
  }
}

TEST(MetricsTest, SweepBoundedByFractionWidth) {
  for (int n : replacement_widths()) {
    for (const auto& fmt : enumerate_ieee_equivalent(n)) {
      const ErrorReport r = sweep_conversion_error(fmt, 5000, 3);
      EXPECT_LE(r.max_rel_err_pct, 100.0 * std::ldexp(1.0, -fmt.fraction_bits()));
      EXPECT_GE(r.max_rel_err_pct, r.mean_rel_err_pct);
    }
  }
}

TEST(MetricsTest, SweepDeterministicAcrossThreadCounts) {
  const auto fmt = F(24, 5, 4);
  const ErrorReport one = sweep_conversion_error(fmt, 50000, 12, SampleDistribution::LogUniform, 1);
  const ErrorReport four = sweep_conversion_error(fmt, 50000, 12, SampleDistribution::LogUniform, 4);
  EXPECT_EQ(one.max_rel_err_pct, four.max_rel_err_pct);
  EXPECT_EQ(one.mean_rel_err_pct, four.mean_rel_err_pct);
  EXPECT_EQ(one.rmse, four.rmse);
  const ErrorReport other = sweep_conversion_error(fmt, 50000, 13);
  EXPECT_NE(one.mean_rel_err_pct, other.mean_rel_err_pct);
}

TEST(MetricsTest, SweepRejectsZeroSamples) {
  EXPECT_THROW(sweep_conversion_error(F(32, 6, 2), 0, 1), std::invalid_argument);
}

TEST(MetricsTest, UniformRealSweepConcentratesAtTopBinades) {
  const ErrorReport r =
      sweep_conversion_error(F(32, 3, 16), 10000, 1, SampleDistribution::UniformReal);
  EXPECT_GT(r.max_rel_err_pct, 0.0);
  EXPECT_LE(r.max_rel_err_pct, 100.0 * std::ldexp(1.0, -12));
}

}  // namespace
}  // namespace fixposit
