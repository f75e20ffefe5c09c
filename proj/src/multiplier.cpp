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

#include "fixposit/multiplier.hpp"

#include <bit>
#include <stdexcept>

namespace fixposit {
namespace {

void require_same_format(const FixedPositWord& a, const FixedPositWord& b) {
  if (!(a.fmt == b.fmt)) {
    throw std::invalid_argument("operand formats differ: " + a.fmt.to_string() + " vs " +
                                b.fmt.to_string());
  }
}

struct OperandFields {
  int k;
  int exponent;
  std::uint64_t significand;
};

// Regime decoder: shift the regime field left while the leading bit repeats.
OperandFields decode_magnitude(std::uint64_t mag, const FixedPositFormat& fmt) {
  const int es = fmt.exponent_bits();
  const int rs = fmt.regime_bits();
  const int f = fmt.fraction_bits();
  std::uint64_t regime = (mag >> (es + f)) & width_mask(rs);
  const std::uint64_t msb = std::uint64_t{1} << (rs - 1);
  const bool lead = (regime & msb) != 0;
  int run = 0;
  while (run < rs && ((regime & msb) != 0) == lead) {
    regime <<= 1;
    ++run;
  }
  return {lead ? run - 1 : -run, static_cast<int>((mag >> f) & width_mask(es)),
          (std::uint64_t{1} << f) | (mag & width_mask(f))};
}

// Regime encoder: a run of k + 1 ones (k >= 0) or -k zeros, then the
// complement bit repeated to fill the field.
std::uint64_t encode_regime(int k, int rs) {
  std::uint64_t field = 0;
  const bool lead = k >= 0;
  const int run = lead ? k + 1 : -k;
  for (int i = 0; i < rs; ++i) {
    const bool bit = i < run ? lead : !lead;
    field = (field << 1) | (bit ? 1u : 0u);
  }
  return field;
}

}  // namespace

FixedPositWord mul_datapath(const FixedPositWord& a, const FixedPositWord& b,
                            DatapathTrace* trace) {
  require_same_format(a, b);
  const FixedPositFormat& fmt = a.fmt;
  const int n = fmt.width();
  const int es = fmt.exponent_bits();
  const int rs = fmt.regime_bits();
  const int f = fmt.fraction_bits();
  DatapathTrace t;

  // (1) sign
  t.sa = (a.bits >> (n - 1)) != 0;
  t.sb = (b.bits >> (n - 1)) != 0;
  t.sc = t.sa != t.sb;

  const std::uint64_t nar = nar_pattern(n);
  if (a.bits == nar || b.bits == nar || a.bits == 0 || b.bits == 0) {
    t.special = true;
    if (trace) *trace = t;
    const bool is_nar_result = a.bits == nar || b.bits == nar;
    return {is_nar_result ? nar : 0, fmt};
  }

  // (2) decoders operate on magnitudes
  const std::uint64_t mag_a = t.sa ? twos_complement(a.bits, n) : a.bits;
  const std::uint64_t mag_b = t.sb ? twos_complement(b.bits, n) : b.bits;
  const OperandFields da = decode_magnitude(mag_a, fmt);
  const OperandFields db = decode_magnitude(mag_b, fmt);
  t.ka = da.k;
  t.kb = db.k;
  t.shifted_ka = da.k * (1 << es);
  t.shifted_kb = db.k * (1 << es);
  t.ea = da.exponent;
  t.eb = db.exponent;
  t.fa = da.significand;
  t.fb = db.significand;

  // (3) fraction multiply and normalise; the product has 2f + 2 bits.
  t.product = u128{t.fa} * u128{t.fb};
  t.carry = ((t.product >> (2 * f + 1)) & 1) != 0;
  const int drop = t.carry ? f + 1 : f;

  // (4) scale adder
  t.raw_scale = t.shifted_ka + t.ea + t.shifted_kb + t.eb + (t.carry ? 1 : 0);

  // Round to nearest even on the dropped bits.
  std::uint64_t kept = static_cast<std::uint64_t>(t.product >> drop);
  const bool guard = ((t.product >> (drop - 1)) & 1) != 0;
  const bool sticky = (t.product & ((u128{1} << (drop - 1)) - 1)) != 0;
  if (guard && (sticky || (kept & 1) != 0)) ++kept;
  int scale = t.raw_scale;
  if (kept >> (f + 1)) {
    kept >>= 1;
    ++scale;
    t.round_carry = true;
  }

  // (5) encoder, with saturation at the ends of the scale range
  const ScaleRange range = fmt.scale_range();
  std::uint64_t mag;
  if (scale > range.max_scale) {
    t.saturated = true;
    mag = width_mask(n - 1);
  } else if (scale < range.min_scale) {
    t.saturated = true;
    mag = 1;
  } else {
    t.kc = scale >> es;
    t.ec = scale - t.kc * (1 << es);
    t.fc = kept & width_mask(f);
    t.rc = encode_regime(t.kc, rs);
    mag = (t.rc << (es + f)) | (static_cast<std::uint64_t>(t.ec) << f) | t.fc;
    if (mag == 0) {
      t.saturated = true;
      mag = 1;
    }
  }
  if (trace) *trace = t;
  return {t.sc ? twos_complement(mag, n) : mag, fmt};
}

FixedPositWord mul_reference(const FixedPositWord& a, const FixedPositWord& b) {
  require_same_format(a, b);
  const DecodedNumber x = decode(a);
  const DecodedNumber y = decode(b);
  if (x.is_nar() || y.is_nar()) return encode(DecodedNumber::nar(), a.fmt);
  if (x.is_zero() || y.is_zero()) return encode(DecodedNumber::zero(), a.fmt);

  // (mx / 2^f) * (my / 2^f) lies in [1, 4); rescale into [1, 2).
  u128 num = u128{x.significand} * u128{y.significand};
  int den_log2 = x.fraction_bits + y.fraction_bits;
  int scale = x.scale + y.scale;
  if (num >= (u128{2} << den_log2)) ++scale, ++den_log2;
  return encode(x.negative != y.negative, scale, num, den_log2, a.fmt);
}

std::uint32_t SubstitutedMultiply::operator()(std::uint32_t a, std::uint32_t b) const {
  const FixedPositWord pa = from_binary32(a, fmt_, rm_);
  const FixedPositWord pb = from_binary32(b, fmt_, rm_);
  return to_binary32_bits(mul_datapath(pa, pb), rm_);
}

float SubstitutedMultiply::operator()(float a, float b) const {
  return std::bit_cast<float>(
      (*this)(std::bit_cast<std::uint32_t>(a), std::bit_cast<std::uint32_t>(b)));
}

}  // namespace fixposit
