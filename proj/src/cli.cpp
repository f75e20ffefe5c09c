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

#include "fixposit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cerrno>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fixposit/codec.hpp"
#include "fixposit/format.hpp"
#include "fixposit/image.hpp"
#include "fixposit/metrics.hpp"
#include "fixposit/multiplier.hpp"
#include "fixposit/workloads.hpp"

namespace fixposit {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultSeed = 1;
constexpr std::size_t kDefaultSamples = 100000;

// ---- parsing --------------------------------------------------------------

std::vector<int> parse_int_list(const std::string& text, std::size_t count, const char* what) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                         : comma - pos);
    int v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw UsageError(std::string(what) + " must be " + std::to_string(count) +
                       " comma-separated integers, got '" + text + "'");
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (values.size() != count) {
    throw UsageError(std::string(what) + " must be " + std::to_string(count) +
                     " comma-separated integers, got '" + text + "'");
  }
  return values;
}

FixedPositFormat parse_format(const std::string& text) {
  const auto v = parse_int_list(text, 3, "--fmt");
  return FixedPositFormat::validate(v[0], v[1], v[2]);
}

bool has_hex_prefix(const std::string& text) {
  return text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X');
}

std::uint64_t parse_hex(const std::string& text) {
  std::uint64_t v = 0;
  const char* first = text.data() + 2;
  const char* last = text.data() + text.size();
  const auto [end, ec] = std::from_chars(first, last, v, 16);
  if (ec != std::errc() || end != last) throw std::invalid_argument("bad hex value '" + text + "'");
  return v;
}

double parse_decimal(const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw std::invalid_argument("bad numeric value '" + text + "'");
  }
  return v;
}

/// A binary32 given either as a 0x bit pattern or as a decimal rounded to
/// the nearest binary32.
std::uint32_t parse_binary32(const std::string& text) {
  if (has_hex_prefix(text)) {
    const std::uint64_t v = parse_hex(text);
    if (v > 0xFFFFFFFFu) throw std::invalid_argument("binary32 pattern '" + text + "' exceeds 32 bits");
    return static_cast<std::uint32_t>(v);
  }
  return std::bit_cast<std::uint32_t>(static_cast<float>(parse_decimal(text)));
}

/// A multiplier operand: a 0x word pattern or a decimal value to encode.
FixedPositWord parse_operand(const std::string& text, const FixedPositFormat& fmt) {
  if (has_hex_prefix(text)) return make_word(parse_hex(text), fmt);
  return from_binary64(parse_decimal(text), fmt);
}

// ---- rendering ------------------------------------------------------------

std::string hex(std::uint64_t v, int bits) {
  std::ostringstream s;
  s << "0x" << std::uppercase << std::hex << std::setw((bits + 3) / 4) << std::setfill('0') << v;
  return s.str();
}

std::string hex128(u128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  const auto lo = static_cast<std::uint64_t>(v);
  if (hi == 0) return hex(lo, 1);
  std::ostringstream s;
  s << hex(hi, 1) << std::uppercase << std::hex << std::setw(16) << std::setfill('0') << lo;
  return s.str();
}

std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

std::string num(const Json& j) {
  if (j.is_null()) return "-";
  if (j.is_number_float()) return num(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

Json format_json(const FixedPositFormat& f) {
  return Json::array({f.width(), f.exponent_bits(), f.regime_bits()});
}

Json optional_json(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json error_report_json(const ErrorReport& r) {
  Json j;
  j["count"] = r.count;
  j["skipped"] = r.skipped;
  j["max_rel_err_pct"] = r.max_rel_err_pct;
  j["mean_rel_err_pct"] = r.mean_rel_err_pct;
  j["rmse"] = r.rmse;
  j["psnr_db"] = optional_json(r.psnr_db);
  return j;
}

std::string class_name(const DecodedNumber& d) {
  if (d.is_zero()) return "zero";
  if (d.is_nar()) return "nar";
  return "normal";
}

Json exact_value(const FixedPositWord& w) {
  try {
    return to_binary64(w);
  } catch (const std::domain_error&) {
    return nullptr;  // more than 53 significant bits
  }
}

Json word_json(const FixedPositWord& w) {
  const DecodedNumber d = decode(w);
  Json j;
  j["word"] = hex(w.bits, w.fmt.width());
  j["class"] = class_name(d);
  if (d.is_normal()) {
    const int k = regime_k(d, w.fmt);
    j["sign"] = d.negative ? 1 : 0;
    j["regime_k"] = k;
    j["exponent"] = d.scale - k * (1 << w.fmt.exponent_bits());
    j["fraction"] = hex(d.significand & ((std::uint64_t{1} << d.fraction_bits) - 1),
                        d.fraction_bits);
    j["scale"] = d.scale;
  }
  j["value"] = exact_value(w);
  j["binary32"] = hex(to_binary32_bits(w), 32);
  return j;
}

Json trace_json(const DatapathTrace& t) {
  Json j;
  j["special"] = t.special;
  j["sa"] = t.sa;
  j["sb"] = t.sb;
  j["sc"] = t.sc;
  j["ka"] = t.ka;
  j["kb"] = t.kb;
  j["shifted_ka"] = t.shifted_ka;
  j["shifted_kb"] = t.shifted_kb;
  j["ea"] = t.ea;
  j["eb"] = t.eb;
  j["fa"] = hex(t.fa, 1);
  j["fb"] = hex(t.fb, 1);
  j["product"] = hex128(t.product);
  j["carry"] = t.carry;
  j["raw_scale"] = t.raw_scale;
  j["round_carry"] = t.round_carry;
  j["saturated"] = t.saturated;
  j["kc"] = t.kc;
  j["ec"] = t.ec;
  j["fc"] = hex(t.fc, 1);
  j["rc"] = hex(t.rc, 1);
  return j;
}

Json workload_json(const WorkloadResult& r) {
  Json j;
  j["workload"] = r.workload;
  j["format"] = r.fmt ? format_json(*r.fmt) : Json(nullptr);
  j["size"] = r.size;
  j["seed"] = r.seed;
  j["metric"] = r.metric;
  j["quality"] = r.quality;
  j["quality_loss"] = r.quality_loss;
  j["agreement_pct"] = optional_json(r.agreement_pct);
  j["multiplications"] = r.multiplications;
  j["errors"] = error_report_json(r.errors);
  return j;
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> widths;
    for (const auto& row : rows_) {
      widths.resize(std::max(widths.size(), row.size()));
      for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void print_fields(std::ostream& out, const Json& obj, const std::string& indent = "") {
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      print_fields(out, value, indent + "  ");
    } else {
      out << indent << key << ": " << num(value) << '\n';
    }
  }
}

// ---- report ---------------------------------------------------------------

struct Report {
  std::string command;
  std::vector<std::string> args;
  Json formats = Json::array();
  Json seed = nullptr;
  Json parameters = Json::object();
  Json results = Json::array();

  Json to_json(double wall_time_s) const {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["args"] = args;
    j["formats"] = formats;
    j["seed"] = seed;
    j["parameters"] = parameters;
    j["results"] = results;
    j["wall_time_s"] = wall_time_s;
    return j;
  }
};

// ---- commands -------------------------------------------------------------

struct Options {
  bool json = false;

  std::optional<int> width;
  bool all_paper_widths = false;

  std::vector<std::string> fmts;
  std::string value;
  std::string a;
  std::string b;
  bool trace_datapath = false;

  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  std::string dist = "log-uniform";
  unsigned threads = 0;

  std::string name;
  bool sweep_widths = false;
  std::size_t size = 0;
  std::string trace_out;
  std::string trace_sample_spec;
  std::string image;
  std::string image_out;
};

FixedPositFormat single_format(const Options& o) {
  if (o.fmts.size() != 1) throw UsageError("exactly one --fmt is required");
  return parse_format(o.fmts.front());
}

void cmd_enumerate(const Options& o, Report& rep, std::ostream* out) {
  std::vector<int> widths;
  if (o.all_paper_widths) {
    widths = replacement_widths();
  } else if (o.width) {
    if (*o.width < 4 || *o.width > FixedPositFormat::kMaxWidth) {
      throw std::invalid_argument("--width must be in [4, " +
                                  std::to_string(FixedPositFormat::kMaxWidth) + "]");
    }
    widths = {*o.width};
  } else {
    throw UsageError("one of --width or --all-paper-widths is required");
  }
  Table table({"N", "es", "rs", "f", "min_scale", "max_scale"});
  for (const int n : widths) {
    for (const auto& f : enumerate_ieee_equivalent(n)) {
      rep.formats.push_back(format_json(f));
      Json row;
      row["format"] = format_json(f);
      row["fraction_bits"] = f.fraction_bits();
      row["scale_range"] = Json::array({f.scale_range().min_scale, f.scale_range().max_scale});
      rep.results.push_back(row);
      table.add({std::to_string(f.width()), std::to_string(f.exponent_bits()),
                 std::to_string(f.regime_bits()), std::to_string(f.fraction_bits()),
                 std::to_string(f.scale_range().min_scale),
                 std::to_string(f.scale_range().max_scale)});
    }
  }
  if (out) {
    table.print(*out);
    *out << rep.results.size() << " formats\n";
  }
}

void cmd_convert(const Options& o, Report& rep, std::ostream* out) {
  const FixedPositFormat fmt = single_format(o);
  const std::uint32_t in = parse_binary32(o.value);
  const FixedPositWord w = from_binary32(in, fmt);
  const std::uint32_t back = to_binary32_bits(w);
  rep.formats.push_back(format_json(fmt));
  Json r;
  r["input"] = o.value;
  r["input_binary32"] = hex(in, 32);
  r["input_value"] = static_cast<double>(std::bit_cast<float>(in));
  r["result"] = word_json(w);
  r["round_trip_binary32"] = hex(back, 32);
  r["rel_err_pct"] = optional_json(relative_error_pct(std::bit_cast<float>(in),
                                                      std::bit_cast<float>(back)));
  rep.results.push_back(r);
  if (out) print_fields(*out, r);
}

void cmd_mul(const Options& o, Report& rep, std::ostream* out) {
  const FixedPositFormat fmt = single_format(o);
  const FixedPositWord a = parse_operand(o.a, fmt);
  const FixedPositWord b = parse_operand(o.b, fmt);
  DatapathTrace trace;
  const FixedPositWord c = mul_datapath(a, b, &trace);
  const FixedPositWord ref = mul_reference(a, b);
  rep.formats.push_back(format_json(fmt));
  Json r;
  r["a"] = word_json(a);
  r["b"] = word_json(b);
  r["result"] = word_json(c);
  r["reference_word"] = hex(ref.bits, fmt.width());
  r["matches_reference"] = (ref == c);
  if (o.trace_datapath) r["trace"] = trace_json(trace);
  rep.results.push_back(r);
  if (out) print_fields(*out, r);
}

void cmd_sweep(const Options& o, Report& rep, std::ostream* out) {
  std::vector<FixedPositFormat> formats;
  if (o.all_paper_widths) {
    for (const int n : replacement_widths()) {
      for (const auto& f : enumerate_ieee_equivalent(n)) formats.push_back(f);
    }
  }
  for (const auto& text : o.fmts) formats.push_back(parse_format(text));
  if (formats.empty()) throw UsageError("one of --fmt or --all-paper-widths is required");
  const auto dist = parse_distribution(o.dist);
  if (!dist) throw UsageError("unknown distribution '" + o.dist + "'");
  const unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());

  rep.seed = o.seed;
  rep.parameters["samples"] = o.samples;
  rep.parameters["distribution"] = o.dist;
  Table table({"N", "es", "rs", "f", "max_rel_err_pct", "mean_rel_err_pct", "bound_pct"});
  for (const auto& f : formats) {
    const ErrorReport e = sweep_conversion_error(f, o.samples, o.seed, *dist, threads);
    const double bound = 100.0 * std::ldexp(1.0, -f.fraction_bits());
    rep.formats.push_back(format_json(f));
    Json r;
    r["format"] = format_json(f);
    r["fraction_bits"] = f.fraction_bits();
    r["bound_pct"] = bound;
    r["errors"] = error_report_json(e);
    rep.results.push_back(r);
    table.add({std::to_string(f.width()), std::to_string(f.exponent_bits()),
               std::to_string(f.regime_bits()), std::to_string(f.fraction_bits()),
               num(e.max_rel_err_pct), num(e.mean_rel_err_pct), num(bound)});
  }
  if (out) {
    *out << "samples=" << o.samples << " seed=" << o.seed << " dist=" << o.dist << '\n';
    table.print(*out);
  }
}

void cmd_workload(const Options& o, Report& rep, std::ostream* out) {
  if (!is_workload(o.name)) throw std::invalid_argument("unknown workload '" + o.name + "'");
  std::vector<FixedPositFormat> formats;
  if (o.sweep_widths) {
    for (const int n : replacement_widths()) formats.push_back(FixedPositFormat::validate(n, 6, 2));
  } else {
    formats.push_back(single_format(o));
  }
  std::optional<std::array<int, 2>> sample;
  if (!o.trace_sample_spec.empty()) {
    if (o.trace_out.empty()) throw UsageError("--trace-sample requires --trace-out");
    const auto v = parse_int_list(o.trace_sample_spec, 2, "--trace-sample");
    if (v[0] < 1 || v[1] < 1) throw std::invalid_argument("--trace-sample values must be positive");
    sample = std::array<int, 2>{v[0], v[1]};
  }

  Grid input;
  if (!o.image.empty()) {
    std::ifstream in(o.image, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open image '" + o.image + "'");
    input = read_pgm(in);
  }

  rep.seed = o.seed;
  rep.parameters["workload"] = o.name;
  rep.parameters["size"] = o.size ? o.size : default_size(o.name);
  Table table({"N", "es", "rs", "metric", "quality", "quality_loss", "max_rel_err_pct",
               "psnr_db", "multiplications"});
  for (const auto& f : formats) {
    OperandTrace trace;
    Grid image_out;
    WorkloadConfig cfg;
    cfg.name = o.name;
    cfg.fmt = f;
    cfg.size = o.size;
    cfg.seed = o.seed;
    cfg.trace = o.trace_out.empty() ? nullptr : &trace;
    cfg.image = o.image.empty() ? nullptr : &input;
    cfg.image_out = o.image_out.empty() ? nullptr : &image_out;
    const WorkloadResult r = run_workload(cfg);
    rep.formats.push_back(format_json(f));
    Json j = workload_json(r);

    if (!o.trace_out.empty()) {
      if (sample) {
        trace = trace_sample(trace, static_cast<std::size_t>((*sample)[0]),
                             static_cast<std::size_t>((*sample)[1]), o.seed);
      }
      std::ofstream file(o.trace_out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot write trace '" + o.trace_out + "'");
      write_trace(file, trace);
      j["trace_records"] = trace.size();
    }
    if (!o.image_out.empty()) {
      std::ofstream file(o.image_out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot write image '" + o.image_out + "'");
      write_pgm(file, image_out);
    }
    rep.results.push_back(j);
    table.add({std::to_string(f.width()), std::to_string(f.exponent_bits()),
               std::to_string(f.regime_bits()), r.metric, num(r.quality), num(r.quality_loss),
               num(r.errors.max_rel_err_pct),
               r.errors.psnr_db ? num(*r.errors.psnr_db) : std::string("-"),
               std::to_string(r.multiplications)});
  }
  if (out) {
    *out << o.name << " size=" << rep.parameters["size"].get<std::size_t>() << " seed=" << o.seed
        << '\n';
    table.print(*out);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed-posit number format workbench", kToolName};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_flag("--json", o.json, "Emit a JSON report instead of a text table");

  auto* enumerate = app.add_subcommand(
      "enumerate", "List the formats with the binary32 exponent range at a width");
  auto* width = enumerate->add_option("--width", o.width, "Word width N");
  auto* all_en = enumerate->add_flag("--all-paper-widths", o.all_paper_widths,
                                     "All even widths from 18 to 32");
  width->excludes(all_en);

  auto* convert = app.add_subcommand("convert", "Convert a binary32 value into a format");
  convert->add_option("--fmt", o.fmts, "Format N,es,rs")->required()->expected(1);
  convert->add_option("--value", o.value, "Decimal value or 0x binary32 pattern")->required();

  auto* mul = app.add_subcommand("mul", "Multiply two words through the hardware datapath model");
  mul->add_option("--fmt", o.fmts, "Format N,es,rs")->required()->expected(1);
  mul->add_option("--a", o.a, "0x word pattern or decimal value")->required();
  mul->add_option("--b", o.b, "0x word pattern or decimal value")->required();
  mul->add_flag("--trace-datapath", o.trace_datapath, "Include the per-stage datapath signals");

  auto* sweep = app.add_subcommand("sweep", "Binary32 round-trip conversion error sweep");
  auto* sweep_fmt = sweep->add_option("--fmt", o.fmts, "Format N,es,rs (repeatable)");
  auto* all_sw = sweep->add_flag("--all-paper-widths", o.all_paper_widths,
                                 "Every format from enumerate --all-paper-widths");
  sweep_fmt->excludes(all_sw);
  sweep->add_option("--samples", o.samples, "Number of binary32 samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  sweep->add_option("--dist", o.dist, "Sampling distribution")
      ->check(CLI::IsMember({"log-uniform", "uniform-real"}))
      ->capture_default_str();
  sweep->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");

  auto* workload = app.add_subcommand("workload", "Run a kernel with substituted multiplication");
  workload->add_option("--name", o.name, "Workload name")
      ->required()
      ->check(CLI::IsMember(workload_names()));
  auto* wl_fmt = workload->add_option("--fmt", o.fmts, "Format N,es,rs")->expected(1);
  auto* wl_sweep = workload->add_flag("--sweep-widths", o.sweep_widths,
                                      "Run (N,6,2) for every even N from 18 to 32");
  wl_fmt->excludes(wl_sweep);
  workload->add_option("--size", o.size, "Problem size (0 = workload default)");
  workload->add_option("--seed", o.seed, "Input seed")->capture_default_str();
  auto* trace_out =
      workload->add_option("--trace-out", o.trace_out, "Write the multiplication operand trace");
  workload->add_option("--trace-sample", o.trace_sample_spec,
                       "Keep CHUNKS,LEN seeded runs of the trace");
  workload->add_option("--image", o.image, "8-bit binary PGM input for sobel");
  auto* image_out =
      workload->add_option("--image-out", o.image_out, "Write the substituted sobel output");
  trace_out->excludes(wl_sweep);
  image_out->excludes(wl_sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Report rep;
  rep.args = args;
  std::ostream* sink = o.json ? nullptr : &out;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (enumerate->parsed()) {
      rep.command = "enumerate";
      cmd_enumerate(o, rep, sink);
    } else if (convert->parsed()) {
      rep.command = "convert";
      cmd_convert(o, rep, sink);
    } else if (mul->parsed()) {
      rep.command = "mul";
      cmd_mul(o, rep, sink);
    } else if (sweep->parsed()) {
      rep.command = "sweep";
      cmd_sweep(o, rep, sink);
    } else {
      rep.command = "workload";
      if (!o.sweep_widths && o.fmts.empty()) {
        throw UsageError("one of --fmt or --sweep-widths is required");
      }
      cmd_workload(o, rep, sink);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.json) out << rep.to_json(wall).dump(2) << '\n';
  return kExitOk;
}

}  // namespace fixposit
