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

#ifndef FIXPOSIT_CODEC_HPP_
#define FIXPOSIT_CODEC_HPP_

#include <cstdint>

#include "fixposit/format.hpp"
#include "fixposit/number.hpp"

namespace fixposit {

/// An N-bit pattern stored right-aligned in a 64-bit carrier, together with
/// the layout it is interpreted under. Bits at positions >= N are zero.
template <class Format>
struct Word {
  std::uint64_t bits = 0;
  Format fmt;

  friend bool operator==(const Word&, const Word&) = default;
};

using FixedPositWord = Word<FixedPositFormat>;

constexpr std::uint64_t width_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Two's complement of an N-bit pattern, modulo 2^N.
constexpr std::uint64_t twos_complement(std::uint64_t bits, int n) {
  return (~bits + 1) & width_mask(n);
}

constexpr std::uint64_t nar_pattern(int n) { return std::uint64_t{1} << (n - 1); }

/// Builds a word, rejecting patterns wider than the format.
template <class Format>
Word<Format> make_word(std::uint64_t bits, const Format& fmt) {
  if ((bits & ~width_mask(fmt.width())) != 0) {
    throw std::invalid_argument("bit pattern wider than the format");
  }
  return Word<Format>{bits, fmt};
}

template <class Format>
bool is_nar(const Word<Format>& w) {
  return w.bits == nar_pattern(w.fmt.width());
}

template <class Format>
bool is_zero(const Word<Format>& w) {
  return w.bits == 0;
}

template <class Format>
Word<Format> negate(const Word<Format>& w) {
  return {twos_complement(w.bits, w.fmt.width()), w.fmt};
}

/// Word bits read as an N-bit two's-complement integer.
template <class Format>
std::int64_t signed_value(const Word<Format>& w) {
  const int n = w.fmt.width();
  if (n == 64) return static_cast<std::int64_t>(w.bits);
  const std::uint64_t sign = std::uint64_t{1} << (n - 1);
  return static_cast<std::int64_t>(w.bits ^ sign) - static_cast<std::int64_t>(sign);
}

/// Decodes any N-bit pattern. Regime runs are counted up to the field width
/// and any bits after the run are ignored, so patterns whose regime is not
/// a run followed by complement fill (see is_canonical) alias a canonical one.
DecodedNumber decode(const FixedPositWord& w);

/// True when the regime field of the word's magnitude is a run of identical
/// bits followed only by complement bits. Exactly these words are produced
/// by encode(); Zero and NaR are canonical.
bool is_canonical(const FixedPositWord& w);

/// Encodes (-1)^negative * 2^scale * num / 2^den_log2 with num / 2^den_log2
/// in [1, 2). Rounds to the format's fraction width; scales outside the
/// format's range saturate to the largest or smallest magnitude nonzero word.
FixedPositWord encode(bool negative, int scale, u128 num, int den_log2,
                      const FixedPositFormat& fmt,
                      RoundingMode rm = RoundingMode::NearestEven);

/// Encodes a decoded value (of any origin) into `fmt`.
FixedPositWord encode(const DecodedNumber& d, const FixedPositFormat& fmt,
                      RoundingMode rm = RoundingMode::NearestEven);

FixedPositWord max_magnitude_word(const FixedPositFormat& fmt, bool negative = false);
FixedPositWord min_magnitude_word(const FixedPositFormat& fmt, bool negative = false);

/// Binary32 to fixed-posit: signed zeros and subnormals give Zero, NaN and
/// infinities give NaR.
FixedPositWord from_binary32(std::uint32_t bits, const FixedPositFormat& fmt,
                             RoundingMode rm = RoundingMode::NearestEven);
FixedPositWord from_binary32(float value, const FixedPositFormat& fmt,
                             RoundingMode rm = RoundingMode::NearestEven);
FixedPositWord from_binary64(double value, const FixedPositFormat& fmt,
                             RoundingMode rm = RoundingMode::NearestEven);

/// Exact value; throws std::domain_error when the word carries more than 53
/// significant bits or its scale is outside the binary64 normal range.
double to_binary64(const FixedPositWord& w);

std::uint32_t to_binary32_bits(const FixedPositWord& w,
                               RoundingMode rm = RoundingMode::NearestEven);
float to_binary32(const FixedPositWord& w, RoundingMode rm = RoundingMode::NearestEven);

/// Regime run value k of a Normal word's magnitude (diagnostics only).
int regime_k(const DecodedNumber& d, const FixedPositFormat& fmt);

}  // namespace fixposit

#endif  // FIXPOSIT_CODEC_HPP_
