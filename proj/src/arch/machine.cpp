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

#include "simon/arch/machine.hpp"

#include <algorithm>
#include <stdexcept>

#include "datapath.hpp"

namespace simon::arch {
namespace {

// Iterative per-block cost: initialization cycles plus one cycle per round.
constexpr int kCacheRoutedInit = 1;
constexpr int kRamRoutedInit = 2;
// Integrated pre-expansion: a full bogus encryption, plus one RAM cycle
// when keys reach the RAM through the cache.
constexpr int kIntegratedPreExpansion = kRamRoutedInit + kRounds;
constexpr int kSeparatePreExpansion = kRounds;

// Generous bound on cycles per block, used only to detect a hung datapath.
constexpr std::uint64_t kCyclesPerBlockBound = 64;

}  // namespace

LatencyReport latency_of(const ArchConfig& config, Mode mode) {
  validate(config);
  if (mode == Mode::PreExpand) {
    throw std::invalid_argument("latency is defined for encrypt and decrypt");
  }
  switch (config.kind) {
    case ArchKind::Iterative:
    case ArchKind::InnerPipelined: {
      const bool cache = config.routing == KeyRouting::Cache;
      const int latency = (cache ? kCacheRoutedInit : kRamRoutedInit) + kRounds;
      int pre = 0;
      if (config.pre_expansion == PreExpansion::Separate) {
        pre = kSeparatePreExpansion;
      } else if (mode == Mode::Decrypt) {
        pre = kIntegratedPreExpansion;
      }
      return {latency, latency, pre};
    }
    case ArchKind::FullUnrolled:
      return {1, 1, 0};
    case ArchKind::OuterPipelined:
      return {kRounds, 1, 0};
    case ArchKind::MixedPipelined:
      // The input register ahead of the first split round adds one cycle.
      return {kRounds + 1, 1, 0};
  }
  throw std::invalid_argument("unknown architecture kind");
}

SimMachine::SimMachine(const ArchConfig& config, const MasterKey& key)
    : config_(config), key_(key) {
  validate(config);
  datapath_ = is_iterative_family(config) ? make_iterative(config, key)
                                          : make_pipelined(config, key);
}

SimMachine::~SimMachine() = default;
SimMachine::SimMachine(SimMachine&&) noexcept = default;
SimMachine& SimMachine::operator=(SimMachine&&) noexcept = default;

int SimMachine::round_stages() const { return datapath_->round_stages(); }

int SimMachine::inter_round_registers() const {
  return datapath_->inter_round_registers();
}

void SimMachine::reset() {
  datapath_->reset();
  cycle_ = 0;
  trace_.clear();
  pending_.reset();
}

void SimMachine::present(Block block, Mode mode) {
  pending_ = std::pair{block, mode};
}

void SimMachine::step() {
  Ports ports;
  if (pending_) {
    ports.start = true;
    ports.in = pending_->first;
    ports.mode = pending_->second;
    pending_.reset();
  }
  ++cycle_;
  Probe probe(recording_ ? &trace_ : nullptr, cycle_);
  datapath_->step(ports, probe);
}

bool SimMachine::ready() const { return datapath_->ready(); }
bool SimMachine::output_valid() const { return datapath_->out_valid(); }
Block SimMachine::output() const { return datapath_->out_block(); }
bool SimMachine::key_ready() const { return datapath_->key_ready(); }

JobResult SimMachine::run_job(Mode mode, std::span<const Block> blocks) {
  if (mode == Mode::PreExpand) {
    throw std::invalid_argument("jobs run in encrypt or decrypt mode");
  }
  reset();
  JobResult result;
  result.report = latency_of(config_, mode);
  if (blocks.empty()) return result;

  const std::uint64_t limit =
      (blocks.size() + 2) * kCyclesPerBlockBound + kRounds;
  auto guard = [&] {
    if (cycle_ >= limit) throw std::logic_error("datapath stalled");
  };

  int pre_expansion = 0;
  if (datapath_->needs_pre_expansion(mode)) {
    present({}, Mode::PreExpand);
    do {
      guard();
      step();
    } while (!datapath_->key_ready());
    pre_expansion = static_cast<int>(cycle_);
  }

  std::vector<std::uint64_t> accepted;
  std::uint64_t first_valid = 0;
  std::size_t next = 0;
  result.outputs.reserve(blocks.size());
  while (result.outputs.size() < blocks.size()) {
    guard();
    if (next < blocks.size() && datapath_->ready()) {
      present(blocks[next++], mode);
      accepted.push_back(cycle_ + 1);
    }
    step();
    if (datapath_->out_valid()) {
      if (result.outputs.empty()) first_valid = cycle_;
      result.outputs.push_back(datapath_->out_block());
    }
  }

  result.report.latency_cycles =
      static_cast<int>(first_valid - accepted.front() + 1);
  if (accepted.size() >= 2) {
    result.report.initiation_interval =
        static_cast<int>(accepted[1] - accepted[0]);
  }
  result.report.pre_expansion_cycles = pre_expansion;
  result.trace = trace_;
  return result;
}

std::vector<std::string> SimMachine::signal_names() const {
  return datapath_->signal_names();
}

CycleTrace SimMachine::trace_signals(std::span<const std::string> names) const {
  const auto known = signal_names();
  for (const auto& n : names) {
    if (std::find(known.begin(), known.end(), n) == known.end()) {
      throw std::invalid_argument("unknown signal '" + n + "' for " +
                                  arch_name(config_));
    }
  }
  return trace_.filter(names);
}

SimMachine build_machine(const ArchConfig& config, const MasterKey& key) {
  return SimMachine(config, key);
}

}  // namespace simon::arch
