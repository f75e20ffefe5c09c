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

#ifndef FIXPOSIT_NUMBER_HPP_
#define FIXPOSIT_NUMBER_HPP_

#include <cstdint>

namespace fixposit {

__extension__ typedef unsigned __int128 u128;

enum class RoundingMode { NearestEven };

enum class NumberClass { Zero, NaR, Normal };

/// The exact real denoted by a word: for Normal values
/// (-1)^negative * 2^scale * significand / 2^fraction_bits with
/// 2^fraction_bits <= significand < 2^(fraction_bits + 1).
struct DecodedNumber {
  NumberClass kind = NumberClass::Zero;
  bool negative = false;
  int scale = 0;
  std::uint64_t significand = 0;
  int fraction_bits = 0;

  static DecodedNumber zero() { return {}; }
  static DecodedNumber nar() { return {NumberClass::NaR, false, 0, 0, 0}; }
  static DecodedNumber normal(bool negative, int scale, std::uint64_t significand,
                              int fraction_bits) {
    return {NumberClass::Normal, negative, scale, significand, fraction_bits};
  }

  bool is_zero() const { return kind == NumberClass::Zero; }
  bool is_nar() const { return kind == NumberClass::NaR; }
  bool is_normal() const { return kind == NumberClass::Normal; }

  /// Fraction field without the hidden bit.
  std::uint64_t fraction() const {
    return significand - (std::uint64_t{1} << fraction_bits);
  }

  friend bool operator==(const DecodedNumber&, const DecodedNumber&) = default;
};

/// Result of rounding a significand to a fixed number of fraction bits.
/// When rounding carries into the next binade, `carry` is set and
/// `significand` is renormalised to 2^fraction_bits.
struct RoundedSignificand {
  std::uint64_t significand;
  bool carry;
};

/// Rounds num / 2^den_log2, which must lie in [1, 2), to `fraction_bits`
/// fraction bits. den_log2 <= 126 and fraction_bits <= 62.
RoundedSignificand round_significand(u128 num, int den_log2, int fraction_bits,
                                     RoundingMode rm);

/// Shifts `value` right by `shift` bits rounding to nearest, ties to even.
u128 shift_right_nearest_even(u128 value, int shift);

/// Binary32 operand as seen by the substitution hardware: zero and subnormal
/// inputs decode to Zero, NaN and infinities to NaR.
DecodedNumber decompose_binary32(std::uint32_t bits);
DecodedNumber decompose_binary64(double value);

/// Exact value as binary64; requires at most 53 significant bits and a scale
/// inside the binary64 normal range, else throws std::domain_error. Zero maps to +0.0, NaR to NaN.
double to_binary64(const DecodedNumber& d);

/// Correctly rounded binary32, producing subnormals and infinities as needed.
/// NaR maps to the default quiet NaN.
std::uint32_t round_to_binary32(const DecodedNumber& d, RoundingMode rm);

inline constexpr std::uint32_t kBinary32QuietNaN = 0x7FC00000u;

}  // namespace fixposit

#endif  // FIXPOSIT_NUMBER_HPP_
