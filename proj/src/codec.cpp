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

#include "fixposit/codec.hpp"

#include <bit>

namespace fixposit {
namespace {

// Run length of identical leading bits in a `width`-bit field.
int leading_run(std::uint64_t field, int width) {
  const std::uint64_t top = field << (64 - width);
  const bool ones = (top >> 63) != 0;
  const int run = ones ? std::countl_one(top) : std::countl_zero(top);
  return run < width ? run : width;
}

std::uint64_t canonical_regime(int k, int rs) {
  if (k >= 0) {
    const int run = k + 1;
    return width_mask(run) << (rs - run);
  }
  return width_mask(rs + k);  // -k zeros, then ones
}

std::uint64_t magnitude_of(const FixedPositWord& w) {
  const int n = w.fmt.width();
  return (w.bits >> (n - 1)) != 0 ? twos_complement(w.bits, n) : w.bits;
}

FixedPositWord with_sign(std::uint64_t magnitude, bool negative, const FixedPositFormat& fmt) {
  return {negative ? twos_complement(magnitude, fmt.width()) : magnitude, fmt};
}

}  // namespace

DecodedNumber decode(const FixedPositWord& w) {
  const int n = w.fmt.width();
  const int es = w.fmt.exponent_bits();
  const int rs = w.fmt.regime_bits();
  const int f = w.fmt.fraction_bits();
  if (w.bits == 0) return DecodedNumber::zero();
  if (w.bits == nar_pattern(n)) return DecodedNumber::nar();

  const bool negative = (w.bits >> (n - 1)) != 0;
  const std::uint64_t mag = magnitude_of(w);
  const std::uint64_t regime = (mag >> (es + f)) & width_mask(rs);
  const int run = leading_run(regime, rs);
  const bool ones = ((regime >> (rs - 1)) & 1) != 0;
  const int k = ones ? run - 1 : -run;
  const int exponent = static_cast<int>((mag >> f) & width_mask(es));
  const std::uint64_t fraction = mag & width_mask(f);
  return DecodedNumber::normal(negative, k * (1 << es) + exponent,
                               (std::uint64_t{1} << f) | fraction, f);
}

bool is_canonical(const FixedPositWord& w) {
  if (w.bits == 0 || w.bits == nar_pattern(w.fmt.width())) return true;
  const int rs = w.fmt.regime_bits();
  const std::uint64_t regime =
      (magnitude_of(w) >> (w.fmt.exponent_bits() + w.fmt.fraction_bits())) & width_mask(rs);
  const int run = leading_run(regime, rs);
  const bool ones = ((regime >> (rs - 1)) & 1) != 0;
  return regime == canonical_regime(ones ? run - 1 : -run, rs);
}

FixedPositWord max_magnitude_word(const FixedPositFormat& fmt, bool negative) {
  return with_sign(width_mask(fmt.width() - 1), negative, fmt);
}

FixedPositWord min_magnitude_word(const FixedPositFormat& fmt, bool negative) {
  return with_sign(1, negative, fmt);
}

FixedPositWord encode(bool negative, int scale, u128 num, int den_log2,
                      const FixedPositFormat& fmt, RoundingMode rm) {
  const int es = fmt.exponent_bits();
  const int rs = fmt.regime_bits();
  const int f = fmt.fraction_bits();
  const auto rounded = round_significand(num, den_log2, f, rm);
  const long long result_scale = static_cast<long long>(scale) + (rounded.carry ? 1 : 0);

  const ScaleRange range = fmt.scale_range();
  if (result_scale > range.max_scale) return max_magnitude_word(fmt, negative);
  if (result_scale < range.min_scale) return min_magnitude_word(fmt, negative);

  const int s = static_cast<int>(result_scale);
  const int k = s >> es;
  const auto exponent = static_cast<std::uint64_t>(s - k * (1 << es));
  const std::uint64_t fraction = rounded.significand & width_mask(f);
  std::uint64_t mag = (canonical_regime(k, rs) << (es + f)) | (exponent << f) | fraction;
  // 2^min_scale itself shares the Zero pattern; the nearest nonzero word is 1.
  if (mag == 0) mag = 1;
  return with_sign(mag, negative, fmt);
}

FixedPositWord encode(const DecodedNumber& d, const FixedPositFormat& fmt, RoundingMode rm) {
  switch (d.kind) {
    case NumberClass::Zero:
      return {0, fmt};
    case NumberClass::NaR:
      return {nar_pattern(fmt.width()), fmt};
    case NumberClass::Normal:
      break;
  }
  return encode(d.negative, d.scale, u128{d.significand}, d.fraction_bits, fmt, rm);
}

FixedPositWord from_binary32(std::uint32_t bits, const FixedPositFormat& fmt, RoundingMode rm) {
  return encode(decompose_binary32(bits), fmt, rm);
}

FixedPositWord from_binary32(float value, const FixedPositFormat& fmt, RoundingMode rm) {
  return from_binary32(std::bit_cast<std::uint32_t>(value), fmt, rm);
}

FixedPositWord from_binary64(double value, const FixedPositFormat& fmt, RoundingMode rm) {
  return encode(decompose_binary64(value), fmt, rm);
}

double to_binary64(const FixedPositWord& w) { return to_binary64(decode(w)); }

std::uint32_t to_binary32_bits(const FixedPositWord& w, RoundingMode rm) {
  return round_to_binary32(decode(w), rm);
}

float to_binary32(const FixedPositWord& w, RoundingMode rm) {
  return std::bit_cast<float>(to_binary32_bits(w, rm));
}

int regime_k(const DecodedNumber& d, const FixedPositFormat& fmt) {
  return d.scale >> fmt.exponent_bits();
}

}  // namespace fixposit
