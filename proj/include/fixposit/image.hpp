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

#ifndef FIXPOSIT_IMAGE_HPP_
#define FIXPOSIT_IMAGE_HPP_

#include <cstddef>
#include <iosfwd>

#include "fixposit/metrics.hpp"

namespace fixposit {

/// Reads a binary (P5) PGM with maxval <= 255.
Grid read_pgm(std::istream& in);

/// Writes a P5 PGM, rounding and clamping samples to [0, 255].
void write_pgm(std::ostream& out, const Grid& image);

/// Deterministic 8-bit test image: a diagonal gradient overlaid with a
/// 16-pixel checkerboard.
Grid synthetic_image(std::size_t width = 256, std::size_t height = 256);

}  // namespace fixposit

#endif  // FIXPOSIT_IMAGE_HPP_
