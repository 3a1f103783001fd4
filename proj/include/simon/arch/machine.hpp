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

#ifndef SIMON_ARCH_MACHINE_HPP_
#define SIMON_ARCH_MACHINE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simon/arch/config.hpp"
#include "simon/arch/trace.hpp"
#include "simon/core.hpp"

namespace simon::arch {

class Datapath;

struct LatencyReport {
  // Cycles from the edge that accepts a block to the edge after which its
  // output is valid.
  int latency_cycles = 0;
  // Cycles between successive accepted blocks.
  int initiation_interval = 1;
  // One-time key pre-expansion cost before the first block, 0 if none.
  int pre_expansion_cycles = 0;

  friend bool operator==(const LatencyReport&,
                         const LatencyReport&) = default;
};

/// Closed-form cycle counts for each datapath:
///
///   iter-cache, inner-pipe-*   enc 45/45/0    dec 45/45/46
///   iter-ram                   enc 46/46/0    dec 46/46/46
///   iter-separate              enc 46/46/44   dec 46/46/44
///   unrolled                   1/1/0
///   outer-pipe                 44/1/0
///   mixed-pipe                 45/1/0
///
/// (latency / initiation interval / pre-expansion).
LatencyReport latency_of(const ArchConfig& config, Mode mode);

struct JobResult {
  std::vector<Block> outputs;
  CycleTrace trace;
  LatencyReport report;
};

/// One clocked instance of a datapath bound to a master key.
///
/// Not thread-safe; distinct machines are independent.
class SimMachine {
 public:
  SimMachine(const ArchConfig& config, const MasterKey& key);
  ~SimMachine();
  SimMachine(SimMachine&&) noexcept;
  SimMachine& operator=(SimMachine&&) noexcept;

  const ArchConfig& config() const { return config_; }
  std::uint64_t cycle() const { return cycle_; }

  int round_stages() const;
  int inter_round_registers() const;

  /// Power-on state: registers cleared, RAM empty, cycle counter at zero.
  void reset();

  /// Drives a start pulse with `block` and `mode` into the next step().
  void present(Block block, Mode mode);

  /// One full clock cycle: settle, falling edge, settle, rising edge.
  void step();

  bool ready() const;
  bool output_valid() const;
  Block output() const;
  bool key_ready() const;

  /// Runs blocks through the datapath from power-on, performing any key
  /// pre-expansion the mode requires first. Mode must be Encrypt or
  /// Decrypt.
  JobResult run_job(Mode mode, std::span<const Block> blocks);

  /// Signals this machine can log.
  std::vector<std::string> signal_names() const;

  /// Selected signals from the last run. Throws std::invalid_argument for a
  /// name the machine does not have.
  CycleTrace trace_signals(std::span<const std::string> names) const;

  /// Logging is on by default; bulk verification turns it off.
  void set_recording(bool on) { recording_ = on; }
  const CycleTrace& trace() const { return trace_; }

 private:
  ArchConfig config_;
  MasterKey key_;
  std::unique_ptr<Datapath> datapath_;
  std::uint64_t cycle_ = 0;
  bool recording_ = true;
  CycleTrace trace_;
  std::optional<std::pair<Block, Mode>> pending_;
};

/// Validates the configuration and wires the datapath.
SimMachine build_machine(const ArchConfig& config, const MasterKey& key);

}  // namespace simon::arch

#endif  // SIMON_ARCH_MACHINE_HPP_
