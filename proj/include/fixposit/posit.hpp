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

#ifndef FIXPOSIT_POSIT_HPP_
#define FIXPOSIT_POSIT_HPP_

#include <cstdint>

#include "fixposit/codec.hpp"

namespace fixposit {

/// Word of a standard posit, tagged by its PositFormat.
using PositWord = Word<PositFormat>;

/// Standard posit decoding: a regime run terminated by the opposite bit (or
/// by the end of the word), up to es exponent bits, remaining bits fraction.
/// Exponent bits cut off by the end of the word are the low-order bits and
/// read as zero.
DecodedNumber posit_decode(const PositWord& w);

/// Inverse of posit_decode with nearest-even rounding applied to the whole
/// encoded bit string, so the fraction width follows the regime length.
/// Nonzero values never round to Zero and never overflow past the largest
/// magnitude word.
PositWord posit_encode(bool negative, int scale, u128 num, int den_log2, const PositFormat& fmt,
                       RoundingMode rm = RoundingMode::NearestEven);
PositWord posit_encode(const DecodedNumber& d, const PositFormat& fmt,
                       RoundingMode rm = RoundingMode::NearestEven);

PositWord posit_from_binary32(std::uint32_t bits, const PositFormat& fmt,
                              RoundingMode rm = RoundingMode::NearestEven);
double posit_to_binary64(const PositWord& w);
std::uint32_t posit_to_binary32_bits(const PositWord& w,
                                     RoundingMode rm = RoundingMode::NearestEven);

/// Exact posit product rounded once.
PositWord posit_mul(const PositWord& a, const PositWord& b);

/// Binary32 multiply routed through a standard posit multiplier.
class PositSubstitutedMultiply {
 public:
  explicit PositSubstitutedMultiply(PositFormat fmt, RoundingMode rm = RoundingMode::NearestEven)
      : fmt_(fmt), rm_(rm) {}

  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const;
  float operator()(float a, float b) const;

  const PositFormat& format() const { return fmt_; }

 private:
  PositFormat fmt_;
  RoundingMode rm_;
};

inline PositSubstitutedMultiply posit_mul_binary32_via(
    const PositFormat& fmt, RoundingMode rm = RoundingMode::NearestEven) {
  return PositSubstitutedMultiply(fmt, rm);
}

}  // namespace fixposit

#endif  // FIXPOSIT_POSIT_HPP_
