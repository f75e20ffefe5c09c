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

#include "fixposit/number.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fixposit {

u128 shift_right_nearest_even(u128 value, int shift) {
  if (shift <= 0) return value;
  if (shift > 128) return 0;
  if (shift == 128) {
    // Only values above 2^127 round up to one unit.
    const u128 half = u128{1} << 127;
    return value > half ? 1 : 0;
  }
  const u128 q = value >> shift;
  const u128 rem = value & ((u128{1} << shift) - 1);
  const u128 half = u128{1} << (shift - 1);
  if (rem > half || (rem == half && (q & 1))) return q + 1;
  return q;
}

RoundedSignificand round_significand(u128 num, int den_log2, int fraction_bits,
                                     RoundingMode) {
  if (den_log2 < 0 || den_log2 > 126 || fraction_bits < 0 || fraction_bits > 62) {
    throw std::invalid_argument("round_significand: width out of range");
  }
  const u128 one = u128{1} << den_log2;
  if (num < one || num >= (one << 1)) {
    throw std::invalid_argument("significand outside [1, 2)");
  }
  u128 q = den_log2 >= fraction_bits ? shift_right_nearest_even(num, den_log2 - fraction_bits)
                                     : num << (fraction_bits - den_log2);
  const u128 two = u128{1} << (fraction_bits + 1);
  if (q == two) return {static_cast<std::uint64_t>(q >> 1), true};
  return {static_cast<std::uint64_t>(q), false};
}

DecodedNumber decompose_binary32(std::uint32_t bits) {
  const bool negative = (bits >> 31) != 0;
  const std::uint32_t biased = (bits >> 23) & 0xFFu;
  const std::uint32_t mantissa = bits & 0x7FFFFFu;
  if (biased == 0xFF) return DecodedNumber::nar();
  if (biased == 0) return DecodedNumber::zero();
  return DecodedNumber::normal(negative, static_cast<int>(biased) - 127,
                               (std::uint64_t{1} << 23) | mantissa, 23);
}

DecodedNumber decompose_binary64(double value) {
  const auto bits = std::bit_cast<std::uint64_t>(value);
  const bool negative = (bits >> 63) != 0;
  const std::uint64_t biased = (bits >> 52) & 0x7FFu;
  const std::uint64_t mantissa = bits & ((std::uint64_t{1} << 52) - 1);
  if (biased == 0x7FF) return DecodedNumber::nar();
  if (biased == 0) return DecodedNumber::zero();
  return DecodedNumber::normal(negative, static_cast<int>(biased) - 1023,
                               (std::uint64_t{1} << 52) | mantissa, 52);
}

double to_binary64(const DecodedNumber& d) {
  switch (d.kind) {
    case NumberClass::Zero:
      return 0.0;
    case NumberClass::NaR:
      return std::numeric_limits<double>::quiet_NaN();
    case NumberClass::Normal:
      break;
  }
  std::uint64_t significand = d.significand;
  int fraction_bits = d.fraction_bits;
  while (fraction_bits > 52 && (significand & 1) == 0) {
    significand >>= 1;
    --fraction_bits;
  }
  if (fraction_bits > 52 || d.scale < -1022 || d.scale > 1023) {
    throw std::domain_error("value is not exactly representable as binary64");
  }
  const double magnitude =
      std::ldexp(static_cast<double>(significand), d.scale - fraction_bits);
  return d.negative ? -magnitude : magnitude;
}

std::uint32_t round_to_binary32(const DecodedNumber& d, RoundingMode) {
  switch (d.kind) {
    case NumberClass::Zero:
      return 0;
    case NumberClass::NaR:
      return kBinary32QuietNaN;
    case NumberClass::Normal:
      break;
  }
  const std::uint32_t sign = d.negative ? 0x80000000u : 0u;
  // Quantise to units of 2^(exponent - 23) where exponent is clamped at the
  // subnormal boundary.
  int exponent = d.scale < -126 ? -126 : d.scale;
  const long shift = static_cast<long>(d.scale) - d.fraction_bits - exponent + 23;
  u128 q;
  if (shift >= 0) {
    q = u128{d.significand} << shift;
  } else if (shift < -127) {
    q = 0;
  } else {
    q = shift_right_nearest_even(u128{d.significand}, static_cast<int>(-shift));
  }
  constexpr u128 kHidden = u128{1} << 23;
  if (q == (kHidden << 1)) {
    q = kHidden;
    ++exponent;
  }
  if (q < kHidden) return sign | static_cast<std::uint32_t>(q);  // subnormal or zero
  const int biased = exponent + 127;
  if (biased >= 0xFF) return sign | 0x7F800000u;
  return sign | (static_cast<std::uint32_t>(biased) << 23) |
         static_cast<std::uint32_t>(q - kHidden);
}

}  // namespace fixposit
