// Copyright 2026 The simon-arch Authors.
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

#include "simon/perf_model.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "simon/text_io.hpp"

namespace simon::perf {
namespace {

constexpr std::string_view kHeader = "label,area_slices,tclk_ns";
constexpr std::string_view kDagger = "†";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

void check_shape(const PerfInputs& in) {
  if (in.block_bits <= 0 || in.rounds <= 0) {
    throw std::invalid_argument("block size and rounds must be positive");
  }
  if (in.unroll < 1 || in.unroll > in.rounds) {
    throw std::invalid_argument("unroll factor must be in 1..rounds");
  }
  const bool single =
      in.formula == Formula::RoundFunction || in.formula == Formula::Iterative;
  if (single && in.unroll != 1) {
    throw std::invalid_argument("round-function and iterative rows use K = 1");
  }
}

// Bits per second for a one-second clock period.
double rate_numerator(const PerfInputs& in) {
  const double bits = in.block_bits;
  const double rounds = in.rounds;
  const double k = in.unroll;
  switch (in.formula) {
    case Formula::RoundFunction:
      return bits;
    case Formula::Iterative:
      return bits / rounds;
    case Formula::FullUnrolled:
      return bits / (rounds / k);
    case Formula::OuterPipelined:
    case Formula::MixedPipelined:
      return k * bits / rounds;
  }
  throw std::invalid_argument("unknown formula");
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", round_to(v, 3));
  return buf;
}

std::string mark(std::string cell, bool provisional) {
  if (provisional) cell += kDagger;
  return cell;
}

}  // namespace

double round_to(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

double throughput_rate(const PerfInputs& in) {
  check_shape(in);
  if (!(in.tclk_seconds > 0.0)) {
    throw std::invalid_argument("clock period must be positive");
  }
  return rate_numerator(in) / in.tclk_seconds / 1e6;
}

double back_compute_tclk(const PerfInputs& shape, double rate_mbps) {
  check_shape(shape);
  if (!(rate_mbps > 0.0)) {
    throw std::invalid_argument("throughput rate must be positive");
  }
  return rate_numerator(shape) / (rate_mbps * 1e6);
}

double throughput_to_area(double rate_mbps, long slices) {
  if (slices <= 0) throw std::invalid_argument("area must be positive");
  return rate_mbps / static_cast<double>(slices);
}

std::optional<PerfInputs> shape_for_label(std::string_view label) {
  PerfInputs in;
  in.label = std::string(label);
  if (label == "round-function") {
    in.formula = Formula::RoundFunction;
  } else if (label == "iter-cache" || label == "iter-ram" ||
             label == "iter-separate") {
    in.formula = Formula::Iterative;
  } else if (label == "unrolled") {
    in.formula = Formula::FullUnrolled;
    in.unroll = 44;
  } else if (label == "outer-pipe") {
    in.formula = Formula::OuterPipelined;
    in.unroll = 44;
  } else if (label == "mixed-pipe") {
    // K_o = 44 as in the reported tables, although the datapath has 43
    // inter-round register banks.
    in.formula = Formula::MixedPipelined;
    in.unroll = 44;
    in.provisional = true;
  } else {
    return std::nullopt;
  }
  return in;
}

std::string description_for(const PerfInputs& in) {
  if (in.label == "iter-cache") return "Iterative (integrated, cache-routing)";
  if (in.label == "iter-ram") return "Iterative (integrated, RAM-routing)";
  if (in.label == "iter-separate") return "Iterative (separate, RAM-routing)";
  const std::string k = std::to_string(in.unroll);
  switch (in.formula) {
    case Formula::RoundFunction:
      return "Round function (single round)";
    case Formula::Iterative:
      return "Iterative";
    case Formula::FullUnrolled:
      return "Full loop unrolling (K = " + k + ")";
    case Formula::OuterPipelined:
      return "Full outer-round pipelining (K = " + k + ")";
    case Formula::MixedPipelined:
      return "Mixed pipelining (K_i = 2, K_o = " + k + ")";
  }
  return in.label;
}

std::vector<PerfInputs> read_inputs(std::istream& in) {
  using io::ParseError;
  std::vector<PerfInputs> rows;
  std::string line;
  std::size_t number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const std::string where = "line " + std::to_string(number) + ": ";
    if (!header_seen) {
      if (text != kHeader) {
        throw ParseError(number, where + "expected header '" +
                                     std::string(kHeader) + "'");
      }
      header_seen = true;
      continue;
    }

    std::vector<std::string_view> fields;
    std::string_view rest = text;
    for (auto comma = rest.find(','); comma != std::string_view::npos;
         comma = rest.find(',')) {
      fields.push_back(trim(rest.substr(0, comma)));
      rest.remove_prefix(comma + 1);
    }
    fields.push_back(trim(rest));
    if (fields.size() != 3) {
      throw ParseError(number, where + "expected 3 fields, got " +
                                   std::to_string(fields.size()));
    }

    auto shape = shape_for_label(fields[0]);
    if (!shape) {
      throw ParseError(number,
                       where + "unknown label '" + std::string(fields[0]) + "'");
    }
    long area = 0;
    const auto [area_end, area_ec] = std::from_chars(
        fields[1].data(), fields[1].data() + fields[1].size(), area);
    if (area_ec != std::errc{} ||
        area_end != fields[1].data() + fields[1].size() || area <= 0) {
      throw ParseError(number, where + "bad area '" + std::string(fields[1]) +
                                   "'");
    }
    double tclk_ns = 0.0;
    std::istringstream tclk_text{std::string(fields[2])};
    tclk_text >> tclk_ns;
    if (!tclk_text || !tclk_text.eof() || !(tclk_ns > 0.0)) {
      throw ParseError(number, where + "bad clock period '" +
                                   std::string(fields[2]) + "'");
    }
    shape->area_slices = area;
    shape->tclk_seconds = tclk_ns * 1e-9;
    rows.push_back(*shape);
  }
  if (!header_seen) {
    throw ParseError(number == 0 ? 1 : number, "missing header line");
  }
  return rows;
}

std::vector<PerfRow> build_report(std::span<const PerfInputs> inputs) {
  std::vector<PerfRow> rows;
  rows.reserve(inputs.size());
  for (const auto& in : inputs) {
    const double rate = throughput_rate(in);
    rows.push_back({in.label, description_for(in), rate, in.area_slices,
                    throughput_to_area(rate, in.area_slices), in.provisional});
  }
  return rows;
}

void write_text(std::ostream& out, std::span<const PerfRow> rows) {
  out << std::left << std::setw(40) << "Architecture" << std::right
      << std::setw(16) << "Mbit/s" << std::setw(10) << "Slices"
      << std::setw(16) << "Mbit/s/slice" << '\n';
  bool any_provisional = false;
  for (const auto& r : rows) {
    any_provisional |= r.provisional;
    // The dagger is one column wide but three bytes long.
    const int pad = r.provisional ? 2 : 0;
    out << std::left << std::setw(40) << r.description << std::right
        << std::setw(16 + pad) << mark(fixed3(r.throughput_mbps), r.provisional)
        << std::setw(10 + pad)
        << mark(std::to_string(r.area_slices), r.provisional)
        << std::setw(16 + pad) << mark(fixed3(r.ratio), r.provisional) << '\n';
  }
  if (any_provisional) {
    out << kDagger << " provisional; mixed pipelining rate uses K_o = 44\n";
  }
}

void write_csv(std::ostream& out, std::span<const PerfRow> rows) {
  out << "label,architecture,throughput_mbps,area_slices,mbps_per_slice\n";
  for (const auto& r : rows) {
    out << r.label << ",\"" << r.description << "\","
        << mark(fixed3(r.throughput_mbps), r.provisional) << ','
        << mark(std::to_string(r.area_slices), r.provisional) << ','
        << mark(fixed3(r.ratio), r.provisional) << '\n';
  }
}

}  // namespace simon::perf
