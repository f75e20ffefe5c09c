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

#include <bit>
#include <stdexcept>

namespace fixposit {

DecodedNumber posit_decode(const PositWord& w) {
  const int n = w.fmt.width();
  const int es = w.fmt.exponent_bits();
  if (w.bits == 0) return DecodedNumber::zero();
  if (w.bits == nar_pattern(n)) return DecodedNumber::nar();

  const bool negative = (w.bits >> (n - 1)) != 0;
  const std::uint64_t mag = negative ? twos_complement(w.bits, n) : w.bits;
  const int body = n - 1;
  const std::uint64_t top = mag << (64 - body);
  const bool ones = (top >> 63) != 0;
  int run = ones ? std::countl_one(top) : std::countl_zero(top);
  if (run > body) run = body;
  const int consumed = run < body ? run + 1 : run;
  const int remaining = body - consumed;
  const int exp_bits = remaining < es ? remaining : es;
  const int frac_bits = remaining - exp_bits;
  const auto exponent =
      static_cast<int>(((mag >> frac_bits) & width_mask(exp_bits)) << (es - exp_bits));
  const std::uint64_t fraction = mag & width_mask(frac_bits);
  const int k = ones ? run - 1 : -run;
  return DecodedNumber::normal(negative, k * (1 << es) + exponent,
                               (std::uint64_t{1} << frac_bits) | fraction, frac_bits);
}

PositWord posit_encode(bool negative, int scale, u128 num, int den_log2, const PositFormat& fmt,
                       RoundingMode) {
  const int n = fmt.width();
  const int es = fmt.exponent_bits();
  const u128 one = u128{1} << den_log2;
  if (den_log2 < 0 || den_log2 > 126 || num < one || num >= (one << 1)) {
    throw std::invalid_argument("significand outside [1, 2)");
  }
  const std::uint64_t maxpos = width_mask(n - 1);
  auto signed_word = [&](std::uint64_t mag) {
    return PositWord{negative ? twos_complement(mag, n) : mag, fmt};
  };

  const int k = scale >> es;
  if (k > n - 2) return signed_word(maxpos);
  if (k < -(n - 2)) return signed_word(1);
  const auto exponent = static_cast<std::uint64_t>(scale - k * (1 << es));

  // Regime run plus terminator.
  const int regime_len = k >= 0 ? k + 2 : -k + 1;
  const u128 regime = k >= 0 ? (((u128{1} << (k + 1)) - 1) << 1) : u128{1};

  // Keep two fraction bits beyond anything that can survive, folding the
  // rest into a sticky bit.
  const int room = n - 1 - regime_len - es;
  const int keep = (room > 0 ? room : 0) + 2;
  const u128 fraction_full = num - one;
  u128 fraction;
  if (den_log2 > keep) {
    const int drop = den_log2 - keep;
    fraction = fraction_full >> drop;
    if ((fraction_full & ((u128{1} << drop) - 1)) != 0) fraction |= 1;
  } else {
    fraction = fraction_full << (keep - den_log2);
  }

  const int length = regime_len + es + keep;
  const u128 pattern = (((regime << es) | exponent) << keep) | fraction;
  u128 rounded = length > n - 1 ? shift_right_nearest_even(pattern, length - (n - 1))
                                : pattern << ((n - 1) - length);
  if (rounded == 0) rounded = 1;
  if (rounded > maxpos) rounded = maxpos;
  return signed_word(static_cast<std::uint64_t>(rounded));
}

PositWord posit_encode(const DecodedNumber& d, const PositFormat& fmt, RoundingMode rm) {
  switch (d.kind) {
    case NumberClass::Zero:
      return {0, fmt};
    case NumberClass::NaR:
      return {nar_pattern(fmt.width()), fmt};
    case NumberClass::Normal:
      break;
  }
  return posit_encode(d.negative, d.scale, u128{d.significand}, d.fraction_bits, fmt, rm);
}

PositWord posit_from_binary32(std::uint32_t bits, const PositFormat& fmt, RoundingMode rm) {
  return posit_encode(decompose_binary32(bits), fmt, rm);
}

double posit_to_binary64(const PositWord& w) { return to_binary64(posit_decode(w)); }

std::uint32_t posit_to_binary32_bits(const PositWord& w, RoundingMode rm) {
  return round_to_binary32(posit_decode(w), rm);
}

PositWord posit_mul(const PositWord& a, const PositWord& b) {
  if (!(a.fmt == b.fmt)) throw std::invalid_argument("operand formats differ");
  const DecodedNumber x = posit_decode(a);
  const DecodedNumber y = posit_decode(b);
  if (x.is_nar() || y.is_nar()) return posit_encode(DecodedNumber::nar(), a.fmt);
  if (x.is_zero() || y.is_zero()) return posit_encode(DecodedNumber::zero(), a.fmt);
  u128 num = u128{x.significand} * u128{y.significand};
  int den_log2 = x.fraction_bits + y.fraction_bits;
  int scale = x.scale + y.scale;
  if (num >= (u128{2} << den_log2)) ++scale, ++den_log2;
  return posit_encode(x.negative != y.negative, scale, num, den_log2, a.fmt);
}

std::uint32_t PositSubstitutedMultiply::operator()(std::uint32_t a, std::uint32_t b) const {
  return posit_to_binary32_bits(
      posit_mul(posit_from_binary32(a, fmt_, rm_), posit_from_binary32(b, fmt_, rm_)), rm_);
}

float PositSubstitutedMultiply::operator()(float a, float b) const {
  return std::bit_cast<float>(
      (*this)(std::bit_cast<std::uint32_t>(a), std::bit_cast<std::uint32_t>(b)));
}

}  // namespace fixposit
