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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit status
// if any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fixposit/codec.hpp"
#include "fixposit/format.hpp"
#include "fixposit/metrics.hpp"
#include "fixposit/multiplier.hpp"
#include "fixposit/posit.hpp"
#include "fixposit/workloads.hpp"
#include "oracle.hpp"

namespace fixposit {
namespace {

constexpr std::uint64_t kSeed = 1;

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt_str(const FixedPositFormat& f) { return f.to_string(); }

std::string num(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

// 1. Enumeration at widths 18..32 (even) against an independent field search.
Outcome enumeration() {
  Outcome o;
  std::set<std::tuple<int, int, int>> expected;
  for (int n = 18; n <= 32; n += 2) {
    for (int es = 0; es < n; ++es) {
      for (int rs = 1; rs < n; ++rs) {
        const bool covers = (std::int64_t{rs} << es) == 128;  // scale range [-128, 127]
        if (covers && n - 1 - rs - es >= 1) expected.insert({n, es, rs});
      }
    }
  }
  std::set<std::tuple<int, int, int>> got;
  std::size_t listed = 0;
  for (const int n : replacement_widths()) {
    for (const auto& f : enumerate_ieee_equivalent(n)) {
      got.insert({f.width(), f.exponent_bits(), f.regime_bits()});
      ++listed;
      o.check(f.scale_range().covers(kBinary32NormalRange), fmt_str(f) + " misses binary32 range");
    }
  }
  o.check(listed == 38 && got.size() == 38, "expected 38 formats, got " + std::to_string(listed));
  o.check(got == expected, "format set differs from the field search");
  o.note(std::to_string(listed) + " formats");
  return o;
}

// 2. Conversion error sweep at 32 bits, each within a factor of two of the
// expected maximum (exact zero where expected).
Outcome conversion_sweep() {
  Outcome o;
  const std::vector<std::pair<std::array<int, 3>, double>> cases = {
      {{32, 6, 2}, 0.0},     {{32, 7, 1}, 0.0},      {{32, 3, 16}, 2.44e-2},
      {{32, 4, 8}, 1.78e-4}, {{32, 5, 4}, 1.19e-5},
  };
  for (const auto& [p, expected] : cases) {
    const auto f = FixedPositFormat::validate(p[0], p[1], p[2]);
    const double got = sweep_conversion_error(f, 100000, kSeed).max_rel_err_pct;
    const bool ok = expected == 0.0 ? got == 0.0 : (got >= expected / 2 && got <= expected * 2);
    o.note(fmt_str(f) + " max=" + num(got) + "% (expected " + num(expected) + "%)");
    o.check(ok, fmt_str(f) + " outside factor-2 window");
  }
  return o;
}

// 3. Hardware datapath model against the exact reference on every operand pair.
Outcome datapath_equivalence() {
  Outcome o;
  for (const auto& [n, es, rs] : {std::tuple{8, 2, 2}, std::tuple{8, 3, 1}, std::tuple{10, 3, 2}}) {
    const auto f = FixedPositFormat::validate(n, es, rs);
    std::uint64_t mismatches = 0;
    std::uint64_t pairs = 0;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::uint64_t b = 0; b < count; ++b) {
        ++pairs;
        if (mul_datapath(make_word(a, f), make_word(b, f)) != mul_reference(make_word(a, f), make_word(b, f))) {
          ++mismatches;
        }
      }
    }
    o.note(fmt_str(f) + " " + std::to_string(pairs) + " pairs");
    o.check(mismatches == 0, fmt_str(f) + " " + std::to_string(mismatches) + " mismatches");
  }
  return o;
}

float random_normal(std::mt19937_64& rng, int min_exp, int max_exp) {
  std::uniform_int_distribution<int> exp(min_exp, max_exp);
  std::uniform_int_distribution<std::uint32_t> mant(0, (1u << 23) - 1);
  std::bernoulli_distribution sign(0.5);
  const std::uint32_t bits = (static_cast<std::uint32_t>(sign(rng)) << 31) |
                             (static_cast<std::uint32_t>(exp(rng) + 127) << 23) | mant(rng);
  return std::bit_cast<float>(bits);
}

// 4. Substituted (32,6,2) multiplication equals native binary32.
Outcome binary32_equivalence() {
  Outcome o;
  const auto mul = mul_binary32_via(FixedPositFormat::validate(32, 6, 2));
  std::mt19937_64 rng(kSeed);
  std::uint64_t pairs = 0;
  std::uint64_t mismatches = 0;
  while (pairs < 1000000) {
    const float a = random_normal(rng, -126, 127);
    const float b = random_normal(rng, -126, 127);
    const float native = a * b;
    if (!std::isnormal(native)) continue;
    ++pairs;
    if (std::bit_cast<std::uint32_t>(mul(a, b)) != std::bit_cast<std::uint32_t>(native)) ++mismatches;
  }
  o.note(std::to_string(pairs) + " pairs");
  o.check(mismatches == 0, std::to_string(mismatches) + " mismatches");
  return o;
}

// 5. Workload substitution: exact at 32 bits, bounded error at 18 bits and
// non-increasing loss with width.
Outcome workload_errors() {
  Outcome o;
  for (const std::string name : {"gemm", "axpby", "trsv", "dot", "fft", "blackscholes"}) {
    const std::size_t size = name == "fft" ? 256 : 200;  // fft needs a power of two
    std::vector<double> losses;
    for (const int n : replacement_widths()) {
      WorkloadConfig cfg;
      cfg.name = name;
      cfg.fmt = FixedPositFormat::validate(n, 6, 2);
      cfg.size = size;
      cfg.seed = kSeed;
      losses.push_back(run_workload(cfg).errors.mean_rel_err_pct);
    }
    o.check(losses.back() == 0.0, name + " nonzero error at 32 bits");
    o.check(losses.front() >= 0.01 && losses.front() <= 5.0,
            name + " 18-bit error " + num(losses.front()) + "% outside [0.01, 5]");
    for (std::size_t i = 1; i < losses.size(); ++i) {
      o.check(losses[i] <= losses[i - 1], name + " loss increases at N=" + std::to_string(18 + 2 * i));
    }
    o.note(name + "@18=" + num(losses.front()) + "%");
  }
  return o;
}

// 6. Sobel on the synthetic image.
Outcome sobel_psnr() {
  Outcome o;
  WorkloadConfig cfg;
  cfg.name = "sobel";
  cfg.seed = kSeed;
  cfg.fmt = FixedPositFormat::validate(18, 6, 2);
  const double narrow = *run_workload(cfg).errors.psnr_db;
  cfg.fmt = FixedPositFormat::validate(32, 6, 2);
  const double wide = *run_workload(cfg).errors.psnr_db;
  o.check(narrow >= 30.0, "18-bit PSNR " + num(narrow) + " dB below 30");
  o.check(wide == kPsnrCapDb, "32-bit PSNR " + num(wide) + " dB is not the cap");
  o.note("18-bit " + num(narrow) + " dB, 32-bit " + num(wide) + " dB");
  return o;
}

// 7. Codec properties on every format with N <= 12 and the half-ulp bound
// on sampled binary32 values for each enumerated format.
Outcome codec_properties() {
  Outcome o;
  std::size_t formats = 0;
  std::uint64_t failures = 0;
  for (int n = 4; n <= 12; ++n) {
    for (int es = 0; es <= n - 3; ++es) {
      for (int rs = 1; n - 1 - rs - es >= 1; ++rs) {
        const auto f = FixedPositFormat::validate(n, es, rs);
        ++formats;
        const std::uint64_t count = std::uint64_t{1} << n;
        std::vector<std::pair<std::int64_t, double>> canonical;
        for (std::uint64_t bits = 0; bits < count; ++bits) {
          const auto w = make_word(bits, f);
          const DecodedNumber d = decode(w);
          const long double expect = oracle::fixed_posit_value(bits, n, es, rs);
          if (d.is_nar()) {
            failures += !std::isnan(expect);
            continue;
          }
          const double v = to_binary64(w);
          failures += static_cast<long double>(v) != expect;
          const auto again = encode(d, f);
          if (is_canonical(w)) {
            failures += again != w;
            canonical.emplace_back(signed_value(w), v);
          } else {
            failures += to_binary64(again) != v;
          }
          failures += to_binary64(negate(w)) != -v;
        }
        std::sort(canonical.begin(), canonical.end());
        for (std::size_t i = 1; i < canonical.size(); ++i) {
          failures += !(canonical[i - 1].second < canonical[i].second);
        }
      }
    }
  }
  o.check(failures == 0, std::to_string(failures) + " property failures");
  o.note(std::to_string(formats) + " small formats");

  // The bound covers [2^-126, 2^127); the top binade can exceed maxpos and
  // saturate, so samples there are drawn past rather than tested.
  std::uint64_t bound_failures = 0;
  std::size_t sampled = 0;
  for (const int n : replacement_widths()) {
    for (const auto& f : enumerate_ieee_equivalent(n)) {
      const double h = std::ldexp(1.0, -(f.fraction_bits() + 1));
      const double bound = h / (1.0 - h);
      const SampleStream stream(kSeed, SampleDistribution::LogUniform);
      std::size_t tested = 0;
      for (std::size_t block = 0; tested < 100000; ++block) {
        for (const std::uint32_t bits : stream.block(block, SampleStream::kBlockSize)) {
          if (tested == 100000) break;
          const double x = std::bit_cast<float>(bits);
          if (x >= std::ldexp(1.0, 127)) continue;
          const double q = to_binary64(from_binary32(bits, f));
          bound_failures += std::fabs(x - q) / x > bound;
          ++tested;
        }
      }
      sampled += tested;
    }
  }
  o.check(bound_failures == 0, std::to_string(bound_failures) + " half-ulp violations");
  o.note(std::to_string(sampled) + " bound samples");
  return o;
}

// 8. Posit (32,6) and fixed-posit (32,6,2) agree while scales stay in [-64, 63].
Outcome posit_equivalence() {
  Outcome o;
  const auto fixed = mul_binary32_via(FixedPositFormat::validate(32, 6, 2));
  const auto posit = posit_mul_binary32_via(PositFormat::validate(32, 6));
  std::mt19937_64 rng(kSeed);
  std::uint64_t pairs = 0;
  std::uint64_t mismatches = 0;
  while (pairs < 100000) {
    const float a = random_normal(rng, -64, 63);
    const float b = random_normal(rng, -64, 63);
    const int product_scale = std::ilogb(static_cast<double>(a) * static_cast<double>(b));
    if (product_scale < -64 || product_scale > 63) continue;
    ++pairs;
    if (std::bit_cast<std::uint32_t>(fixed(a, b)) != std::bit_cast<std::uint32_t>(posit(a, b))) {
      ++mismatches;
    }
  }
  o.note(std::to_string(pairs) + " pairs");
  o.check(mismatches == 0, std::to_string(mismatches) + " mismatches");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace fixposit

int main() {
  using namespace fixposit;
  const std::vector<Criterion> criteria = {
      {1, "format enumeration", 1.0, enumeration},
      {2, "conversion error at 32 bits", 10.0, conversion_sweep},
      {3, "datapath equals reference", 60.0, datapath_equivalence},
      {4, "binary32 equivalence at (32, 6, 2)", 1e9, binary32_equivalence},
      {5, "workload substitution error", 120.0, workload_errors},
      {6, "sobel PSNR", 10.0, sobel_psnr},
      {7, "codec properties", 120.0, codec_properties},
      {8, "posit equivalence in [-64, 63]", 1e9, posit_equivalence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.check(s <= c.budget_s, "runtime over " + num(c.budget_s) + " s");
    failed += !o.pass;
    std::printf("%s %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
