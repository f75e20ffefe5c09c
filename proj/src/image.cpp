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

#include "fixposit/image.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fixposit {
namespace {

// Next whitespace-delimited header token, skipping '#' comments.
std::string header_token(std::istream& in) {
  std::string token;
  char c;
  while (in.get(c)) {
    if (c == '#') {
      std::string ignored;
      std::getline(in, ignored);
      if (!token.empty()) break;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!token.empty()) break;
      continue;
    }
    token.push_back(c);
  }
  return token;
}

std::size_t header_number(std::istream& in) {
  const std::string token = header_token(in);
  if (token.empty() || !std::all_of(token.begin(), token.end(), ::isdigit)) {
    throw std::runtime_error("malformed PGM header");
  }
  return std::stoul(token);
}

}  // namespace

Grid read_pgm(std::istream& in) {
  if (header_token(in) != "P5") throw std::runtime_error("not a binary PGM (P5) image");
  Grid g;
  g.width = header_number(in);
  g.height = header_number(in);
  const std::size_t maxval = header_number(in);
  if (g.width == 0 || g.height == 0) throw std::runtime_error("empty PGM image");
  if (maxval == 0 || maxval > 255) throw std::runtime_error("only 8-bit PGM images are supported");
  std::string raw(g.width * g.height, '\0');
  if (!in.read(raw.data(), static_cast<std::streamsize>(raw.size()))) {
    throw std::runtime_error("truncated PGM pixel data");
  }
  g.values.reserve(raw.size());
  for (const char c : raw) g.values.push_back(static_cast<unsigned char>(c));
  return g;
}

void write_pgm(std::ostream& out, const Grid& image) {
  out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
  for (const double v : image.values) {
    const double clamped = std::clamp(std::round(v), 0.0, 255.0);
    out.put(static_cast<char>(static_cast<unsigned char>(clamped)));
  }
}

Grid synthetic_image(std::size_t width, std::size_t height) {
  Grid g{width, height, {}};
  g.values.reserve(width * height);
  const double span = static_cast<double>(width + height - 2);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double ramp = span > 0 ? 200.0 * static_cast<double>(x + y) / span : 0.0;
      const bool dark = ((x / 16) + (y / 16)) % 2 == 0;
      g.values.push_back(std::clamp(std::round(ramp + (dark ? 20.0 : 55.0)), 0.0, 255.0));
    }
  }
  return g;
}

}  // namespace fixposit
