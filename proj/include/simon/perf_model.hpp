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

// Analytical throughput and throughput-to-area model. Clock periods and
// slice counts are measured on hardware and enter as inputs; this module
// only does the arithmetic that relates them.

#ifndef SIMON_PERF_MODEL_HPP_
#define SIMON_PERF_MODEL_HPP_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simon::perf {

/// Which throughput formula applies.
enum class Formula {
  RoundFunction,   // blocksize / T_clk (one round, not a block)
  Iterative,       // blocksize / (rounds * T_clk)
  FullUnrolled,    // blocksize / ((rounds / K) * T_clk)
  OuterPipelined,  // K * blocksize / (rounds * T_clk)
  MixedPipelined,  // K_o * blocksize / (rounds * T_clk(K_i))
};

struct PerfInputs {
  std::string label;
  Formula formula = Formula::Iterative;
  int block_bits = 64;
  int rounds = 44;
  int unroll = 1;  // K, or K_o for mixed pipelining
  double tclk_seconds = 0.0;
  long area_slices = 0;
  bool provisional = false;
};

struct PerfRow {
  std::string label;
  std::string description;
  double throughput_mbps;
  long area_slices;
  double ratio;  // Mbit/s per slice
  bool provisional;
};

/// Mbit/s. Throws std::invalid_argument for T_clk <= 0 or a bad K.
double throughput_rate(const PerfInputs& in);

/// T_clk in seconds that makes throughput_rate produce `rate_mbps` for
/// the given shape (only formula, block_bits, rounds and unroll are used).
double back_compute_tclk(const PerfInputs& shape, double rate_mbps);

/// Mbit/s per slice. Throws std::invalid_argument for slices <= 0.
double throughput_to_area(double rate_mbps, long slices);

/// Formula, K and provisional flag for a report label such as
/// "outer-pipe". Returns nullopt for unknown labels.
std::optional<PerfInputs> shape_for_label(std::string_view label);
std::string description_for(const PerfInputs& in);

/// Parses `label,area_slices,tclk_ns` rows after a header line. Throws
/// simon::io::ParseError naming the offending line.
std::vector<PerfInputs> read_inputs(std::istream& in);

std::vector<PerfRow> build_report(std::span<const PerfInputs> inputs);

/// Values rounded to three decimals; provisional cells carry a dagger.
void write_text(std::ostream& out, std::span<const PerfRow> rows);
void write_csv(std::ostream& out, std::span<const PerfRow> rows);

/// Rounds to `decimals` places, half away from zero.
double round_to(double value, int decimals);

}  // namespace simon::perf

#endif  // SIMON_PERF_MODEL_HPP_
