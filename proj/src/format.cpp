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

#include "fixposit/format.hpp"

#include <sstream>

namespace fixposit {

FixedPositFormat FixedPositFormat::validate(int n, int es, int rs) {
  if (n < 4 || n > kMaxWidth) {
    throw FormatError("fixed-posit width must be in [4, 64], got " + std::to_string(n));
  }
  if (es < 0) throw FormatError("exponent bits must be non-negative");
  if (rs < 1) throw FormatError("regime bits must be at least 1");
  if (n - 1 - rs - es < 1) {
    std::ostringstream os;
    os << "format (" << n << ", " << es << ", " << rs << ") leaves " << (n - 1 - rs - es)
       << " fraction bits; at least one is required";
    throw FormatError(os.str());
  }
  return FixedPositFormat(n, es, rs);
}

ScaleRange FixedPositFormat::scale_range() const {
  const int step = 1 << es_;
  return {-rs_ * step, rs_ * step - 1};
}

std::string FixedPositFormat::to_string() const {
  std::ostringstream os;
  os << '(' << n_ << ", " << es_ << ", " << rs_ << ')';
  return os.str();
}

PositFormat PositFormat::validate(int n, int es) {
  if (n < 3 || n > kMaxWidth) {
    throw FormatError("posit width must be in [3, 64], got " + std::to_string(n));
  }
  if (es < 0 || es > n - 2) throw FormatError("posit exponent bits must be in [0, n - 2]");
  // Scales beyond +-2^30 are not representable in the int scale carrier.
  if ((n - 2) > ((1 << 30) >> es)) throw FormatError("posit scale range too large");
  return PositFormat(n, es);
}

ScaleRange PositFormat::scale_range() const {
  const int max_scale = (n_ - 2) * (1 << es_);
  return {-max_scale, max_scale};
}

std::string PositFormat::to_string() const {
  std::ostringstream os;
  os << '(' << n_ << ", " << es_ << ')';
  return os.str();
}

std::vector<FixedPositFormat> enumerate_ieee_equivalent(int n) {
  std::vector<FixedPositFormat> out;
  if (n < 4 || n > FixedPositFormat::kMaxWidth) return out;
  // rs * 2^es == 128 admits es in [0, 7] with rs = 128 >> es.
  for (int es = 0; es <= 7; ++es) {
    const int rs = 128 >> es;
    if (n - 1 - rs - es >= 1) out.push_back(FixedPositFormat::validate(n, es, rs));
  }
  return out;
}

std::vector<int> replacement_widths() { return {18, 20, 22, 24, 26, 28, 30, 32}; }

}  // namespace fixposit
