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

#include "fixposit/posit.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "fixposit/metrics.hpp"
#include "fixposit/multiplier.hpp"
#include "oracle.hpp"

namespace fixposit {
namespace {

PositFormat P(int n, int es) { return PositFormat::validate(n, es); }
PositWord W(std::uint64_t bits, const PositFormat& fmt) { return make_word(bits, fmt); }

long double value_of(const DecodedNumber& d) {
  if (d.is_zero()) return 0.0L;
  if (d.is_nar()) return std::numeric_limits<long double>::quiet_NaN();
  const long double v =
      std::ldexp(static_cast<long double>(d.significand), d.scale - d.fraction_bits);
  return d.negative ? -v : v;
}

std::vector<PositFormat> small_formats() {
  std::vector<PositFormat> out;
  for (int n = 3; n <= 12; ++n) {
    for (int es = 0; es <= std::min(n - 2, 4); ++es) out.push_back(P(n, es));
  }
  return out;
}

TEST(PositTest, DecodeExamples) {
  const auto fmt = P(8, 2);
  EXPECT_EQ(posit_to_binary64(W(0x4D, fmt)), 3.25);
  EXPECT_TRUE(posit_decode(W(0x00, fmt)).is_zero());
  EXPECT_TRUE(posit_decode(W(0x80, fmt)).is_nar());
  // Seven regime ones with no terminator: k = 6, no exponent bits left.
  EXPECT_EQ(posit_decode(W(0x7F, fmt)).scale, 24);
  // Six ones, terminator, no room for the exponent.
  EXPECT_EQ(posit_decode(W(0x7E, fmt)).scale, 20);
  // Five ones, terminator, one exponent bit: the high bit of e, so e = 2.
  EXPECT_EQ(posit_decode(W(0x7D, fmt)).scale, 18);
  EXPECT_EQ(posit_to_binary64(W(0x01, fmt)), std::ldexp(1.0, -24));
}

TEST(PositTest, EncodeExamples) {
  EXPECT_EQ(posit_encode(false, 1, 13, 3, P(8, 2)).bits, 0x4Du);
  for (const auto& fmt : {P(8, 2), P(16, 1), P(32, 6), P(12, 0)}) {
    EXPECT_EQ(posit_encode(false, 0, 1, 0, fmt).bits, std::uint64_t{1} << (fmt.width() - 2));
  }
  EXPECT_EQ(posit_encode(false, 100, 1, 0, P(8, 2)).bits, 0x7Fu);
  EXPECT_EQ(posit_encode(false, -100, 1, 0, P(8, 2)).bits, 0x01u);
  EXPECT_EQ(posit_encode(true, -100, 1, 0, P(8, 2)).bits, 0xFFu);
  EXPECT_THROW(posit_encode(false, 0, 1, 1, P(8, 2)), std::invalid_argument);
}

TEST(PositTest, DecodeMatchesOracleExhaustively) {
  for (const auto& fmt : small_formats()) {
    for (std::uint64_t bits = 0; bits < (1u << fmt.width()); ++bits) {
      const long double expected = oracle::posit_value(bits, fmt.width(), fmt.exponent_bits());
      const long double actual = value_of(posit_decode(W(bits, fmt)));
      if (std::isnan(expected)) {
        ASSERT_TRUE(std::isnan(actual));
      } else {
        ASSERT_EQ(actual, expected) << fmt.to_string() << " bits " << bits;
      }
    }
  }
}

TEST(PositTest, RoundTripMonotonicAndSymmetric) {
  for (const auto& fmt : small_formats()) {
    const std::uint64_t count = std::uint64_t{1} << fmt.width();
    std::vector<PositWord> words;
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      const auto w = W(bits, fmt);
      ASSERT_EQ(posit_encode(posit_decode(w), fmt).bits, bits) << fmt.to_string();
      if (!is_nar(w)) words.push_back(w);
      if (!is_nar(w) && !is_zero(w)) {
        ASSERT_EQ(value_of(posit_decode(negate(w))), -value_of(posit_decode(w)));
      }
    }
    std::sort(words.begin(), words.end(),
              [](const auto& a, const auto& b) { return signed_value(a) < signed_value(b); });
    for (std::size_t i = 1; i < words.size(); ++i) {
      ASSERT_LT(value_of(posit_decode(words[i - 1])), value_of(posit_decode(words[i])));
    }
  }
}

TEST(PositTest, EncodeMatchesBitStringRoundingOracle) {
  std::mt19937_64 rng(21);
  for (const auto& fmt : {P(8, 2), P(8, 0), P(10, 3), P(12, 1), P(6, 2), P(7, 4)}) {
    const ScaleRange range = fmt.scale_range();
    std::uniform_int_distribution<int> scale(range.min_scale - 4, range.max_scale + 4);
    for (int i = 0; i < 3000; ++i) {
      const bool negative = rng() & 1;
      const int s = scale(rng);
      // Mix exact short significands (ties) with long ones.
      const int bits = (i % 3 == 0) ? 2 : 20;
      const std::uint64_t num = (1u << bits) | (rng() & ((1u << bits) - 1));
      const long double x =
          (negative ? -1 : 1) * std::ldexp(static_cast<long double>(num), s - bits);
      ASSERT_EQ(posit_encode(negative, s, num, bits, fmt).bits,
                oracle::posit_round(x, fmt.width(), fmt.exponent_bits()))
          << fmt.to_string() << " scale " << s << " num " << num;
    }
  }
}

TEST(PositTest, MultiplyExamples) {
  const auto via = posit_mul_binary32_via(P(32, 6));
  EXPECT_EQ(via(1.5f, 2.5f), 3.75f);
  EXPECT_EQ(via(-1.5f, 2.5f), -3.75f);
  EXPECT_EQ(via(0.0f, 2.5f), 0.0f);
  const auto fmt = P(8, 2);
  EXPECT_TRUE(is_nar(posit_mul(W(0x80, fmt), W(0x40, fmt))));
  EXPECT_TRUE(is_zero(posit_mul(W(0x00, fmt), W(0x7F, fmt))));
  EXPECT_EQ(posit_mul(W(0x7F, fmt), W(0x7F, fmt)).bits, 0x7Fu);
}

// Below 2^-64 the regime grows to three bits and only 22 fraction bits remain.
TEST(PositTest, ConversionFromBinary32At32Bits6LosesAtMostOneBit) {
  const ErrorReport r = sweep_conversion_error(P(32, 6), 100000, 1);
  EXPECT_GT(r.max_rel_err_pct, 0.0);
  EXPECT_LE(r.max_rel_err_pct, 100.0 * std::ldexp(1.0, -23));
  EXPECT_EQ(r.count, 100000u);
}

TEST(PositTest, AgreesWithFixedPositOnModerateScales) {
  const auto fixed = mul_binary32_via(FixedPositFormat::validate(32, 6, 2));
  const auto posit = posit_mul_binary32_via(P(32, 6));
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100000; ++i) {
    const auto ea = static_cast<std::uint32_t>(127 - 32 + rng() % 64);
    const auto eb = static_cast<std::uint32_t>(127 - 32 + rng() % 64);
    const auto a = static_cast<std::uint32_t>(rng() & 0x807FFFFFu) | (ea << 23);
    const auto b = static_cast<std::uint32_t>(rng() & 0x807FFFFFu) | (eb << 23);
    ASSERT_EQ(fixed(a, b), posit(a, b));
  }
}

}  // namespace
}  // namespace fixposit
