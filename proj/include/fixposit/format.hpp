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

#ifndef FIXPOSIT_FORMAT_HPP_
#define FIXPOSIT_FORMAT_HPP_

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixposit {

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inclusive range of power-of-two scales a format can express.
struct ScaleRange {
  int min_scale = 0;
  int max_scale = 0;

  bool contains(int scale) const { return min_scale <= scale && scale <= max_scale; }
  bool covers(const ScaleRange& other) const {
    return min_scale <= other.min_scale && other.max_scale <= max_scale;
  }
  friend bool operator==(const ScaleRange&, const ScaleRange&) = default;
};

/// Scale range of IEEE-754 binary32 normal numbers.
inline constexpr ScaleRange kBinary32NormalRange{-126, 127};

/// Layout of a fixed-posit word: one sign bit, `rs` regime bits, `es`
/// exponent bits and the remaining fraction bits. Only constructible through
/// validate(), so every instance satisfies the layout invariants.
class FixedPositFormat {
 public:
  /// Widest supported word; words live right-aligned in a 64-bit carrier.
  static constexpr int kMaxWidth = 64;

  static FixedPositFormat validate(int n, int es, int rs);

  int width() const { return n_; }
  int exponent_bits() const { return es_; }
  int regime_bits() const { return rs_; }
  int fraction_bits() const { return n_ - 1 - rs_ - es_; }

  /// Scales k * 2^es + e for k in [-rs, rs - 1] and e in [0, 2^es - 1].
  ScaleRange scale_range() const;

  std::string to_string() const;  // "(N, es, rs)"

  friend bool operator==(const FixedPositFormat&, const FixedPositFormat&) = default;
  friend auto operator<=>(const FixedPositFormat&, const FixedPositFormat&) = default;

 private:
  FixedPositFormat(int n, int es, int rs) : n_(n), es_(es), rs_(rs) {}

  int n_;
  int es_;
  int rs_;
};

inline ScaleRange scale_range(const FixedPositFormat& fmt) { return fmt.scale_range(); }

/// Standard (variable regime) posit layout.
class PositFormat {
 public:
  static constexpr int kMaxWidth = 64;

  static PositFormat validate(int n, int es);

  int width() const { return n_; }
  int exponent_bits() const { return es_; }

  /// Largest scale is (n - 2) * 2^es, reached by an (n - 1)-bit regime run.
  ScaleRange scale_range() const;

  std::string to_string() const;  // "(N, es)"

  friend bool operator==(const PositFormat&, const PositFormat&) = default;

 private:
  PositFormat(int n, int es) : n_(n), es_(es) {}

  int n_;
  int es_;
};

/// All fixed-posit layouts of width `n` whose scale range is exactly
/// [-128, 127], i.e. rs * 2^es == 128, ordered by exponent bits. These are
/// the layouts matching the binary32 exponent range.
std::vector<FixedPositFormat> enumerate_ieee_equivalent(int n);

/// Even widths 18..32, the candidate binary32 replacement widths.
std::vector<int> replacement_widths();

}  // namespace fixposit

#endif  // FIXPOSIT_FORMAT_HPP_
