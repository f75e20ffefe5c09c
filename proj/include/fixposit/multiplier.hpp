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

#ifndef FIXPOSIT_MULTIPLIER_HPP_
#define FIXPOSIT_MULTIPLIER_HPP_

#include <cstdint>

#include "fixposit/codec.hpp"

namespace fixposit {

/// Intermediate signals of the hardware multiplier, one group per block:
/// sign XOR, regime decoders, fraction multiplier and normaliser, scale
/// adder, and regime encoder.
struct DatapathTrace {
  // Sign XOR.
  bool sa = false;
  bool sb = false;
  bool sc = false;
  // Decoders: regime values and their left-shifted form k * 2^es.
  int ka = 0;
  int kb = 0;
  int shifted_ka = 0;
  int shifted_kb = 0;
  int ea = 0;
  int eb = 0;
  // Fraction multiplier: significands with the hidden bit, raw product and
  // the normalisation carry (product >= 2).
  std::uint64_t fa = 0;
  std::uint64_t fb = 0;
  u128 product = 0;
  bool carry = false;
  // Adder output before rounding: shifted_ka + ea + shifted_kb + eb + carry.
  int raw_scale = 0;
  // Rounding and encoder stage.
  bool round_carry = false;
  bool saturated = false;
  int kc = 0;
  int ec = 0;
  std::uint64_t fc = 0;  // normalised fraction field of the result
  std::uint64_t rc = 0;  // regime field of the result
  bool special = false;  // Zero or NaR operand short-circuited the datapath
};

/// Multiplies two words the way the fixed-posit hardware does: XOR the signs,
/// decode regimes by run counting, multiply the (f+1)-bit significands,
/// normalise, add the scales, round to nearest even and re-encode. Zero and
/// NaR follow posit semantics and scale overflow saturates.
FixedPositWord mul_datapath(const FixedPositWord& a, const FixedPositWord& b,
                            DatapathTrace* trace = nullptr);

/// Same contract as mul_datapath, computed as the exact product of the
/// decoded values followed by a single rounding encode.
FixedPositWord mul_reference(const FixedPositWord& a, const FixedPositWord& b);

/// A binary32 multiply routed through the fixed-posit multiplier: both
/// operands are converted in, multiplied by mul_datapath, and the result is
/// rounded back to binary32.
class SubstitutedMultiply {
 public:
  explicit SubstitutedMultiply(FixedPositFormat fmt,
                               RoundingMode rm = RoundingMode::NearestEven)
      : fmt_(fmt), rm_(rm) {}

  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const;
  float operator()(float a, float b) const;

  const FixedPositFormat& format() const { return fmt_; }

 private:
  FixedPositFormat fmt_;
  RoundingMode rm_;
};

inline SubstitutedMultiply mul_binary32_via(const FixedPositFormat& fmt,
                                            RoundingMode rm = RoundingMode::NearestEven) {
  return SubstitutedMultiply(fmt, rm);
}

}  // namespace fixposit

#endif  // FIXPOSIT_MULTIPLIER_HPP_
