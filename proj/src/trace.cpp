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

#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>

#include "fixposit/workloads.hpp"

namespace fixposit {
namespace {

void put_le32(std::ostream& out, std::uint32_t v) {
  const char bytes[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
                         static_cast<char>((v >> 16) & 0xFF), static_cast<char>((v >> 24) & 0xFF)};
  out.write(bytes, 4);
}

std::uint32_t get_le32(const unsigned char* p) {
  return std::uint32_t{p[0]} | (std::uint32_t{p[1]} << 8) | (std::uint32_t{p[2]} << 16) |
         (std::uint32_t{p[3]} << 24);
}

}  // namespace

void write_trace(std::ostream& out, std::span<const OperandPair> trace) {
  for (const OperandPair& p : trace) {
    put_le32(out, p.a);
    put_le32(out, p.b);
  }
}

OperandTrace read_trace(std::istream& in) {
  OperandTrace trace;
  unsigned char record[8];
  while (in.read(reinterpret_cast<char*>(record), 8)) {
    trace.push_back({get_le32(record), get_le32(record + 4)});
  }
  if (in.gcount() != 0) throw std::runtime_error("trace file ends with a partial record");
  return trace;
}

OperandTrace trace_sample(std::span<const OperandPair> trace, std::size_t chunks,
                          std::size_t chunk_len, std::uint64_t seed) {
  if (chunk_len == 0) throw std::invalid_argument("chunk length must be positive");
  if (trace.size() < chunk_len) {
    throw std::invalid_argument("trace has " + std::to_string(trace.size()) +
                                " pairs, fewer than the chunk length " +
                                std::to_string(chunk_len));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> start(0, trace.size() - chunk_len);
  OperandTrace out;
  out.reserve(chunks * chunk_len);
  for (std::size_t c = 0; c < chunks; ++c) {
    const auto first = trace.begin() + static_cast<std::ptrdiff_t>(start(rng));
    out.insert(out.end(), first, first + static_cast<std::ptrdiff_t>(chunk_len));
  }
  return out;
}

}  // namespace fixposit
