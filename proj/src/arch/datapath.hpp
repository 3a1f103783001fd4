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

#ifndef SIMON_SRC_ARCH_DATAPATH_HPP_
#define SIMON_SRC_ARCH_DATAPATH_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "simon/arch/config.hpp"
#include "simon/arch/trace.hpp"
#include "simon/core.hpp"

namespace simon::arch {

/// Input pins sampled during one clock cycle.
struct Ports {
  bool start = false;
  Mode mode = Mode::Encrypt;
  Block in{};
};

/// Signal sink for one cycle. Emission is a no-op when logging is off.
class Probe {
 public:
  Probe(CycleTrace* trace, std::uint64_t cycle) : trace_(trace), cycle_(cycle) {}

  bool enabled() const { return trace_ != nullptr; }

  void word(std::string_view name, Word value) {
    if (trace_) trace_->append(cycle_, name, value, 32);
  }
  void block(std::string_view name, Block value) {
    if (trace_) trace_->append(cycle_, name, to_u64(value), 64);
  }
  void flag(std::string_view name, bool value) { word(name, value ? 1u : 0u); }

 private:
  CycleTrace* trace_;
  std::uint64_t cycle_;
};

/// A network of registers, RAM and combinational circuits advanced by a
/// two-phase clock. Subclasses provide the combinational settle for each
/// half of the cycle.
class Datapath {
 public:
  virtual ~Datapath() = default;

  void step(const Ports& ports, Probe& probe) {
    settle_before_falling(ports);
    latch_falling();
    settle_before_rising(ports, probe);
    latch_rising();
    observe(probe);
  }

  virtual void reset() = 0;

  virtual bool ready() const = 0;
  virtual bool out_valid() const = 0;
  virtual Block out_block() const = 0;
  /// True once the round-key RAM holds the full schedule. Datapaths without
  /// RAM are always ready.
  virtual bool key_ready() const = 0;
  virtual bool needs_pre_expansion(Mode mode) const = 0;

  virtual int round_stages() const = 0;
  virtual int inter_round_registers() const = 0;
  virtual std::vector<std::string> signal_names() const = 0;

 protected:
  virtual void settle_before_falling(const Ports& ports) = 0;
  virtual void latch_falling() = 0;
  virtual void settle_before_rising(const Ports& ports, Probe& probe) = 0;
  virtual void latch_rising() = 0;
  /// Emits register contents after the rising edge.
  virtual void observe(Probe& probe) const = 0;
};

std::unique_ptr<Datapath> make_iterative(const ArchConfig& config,
                                         const MasterKey& key);
std::unique_ptr<Datapath> make_pipelined(const ArchConfig& config,
                                         const MasterKey& key);

}  // namespace simon::arch

#endif  // SIMON_SRC_ARCH_DATAPATH_HPP_
