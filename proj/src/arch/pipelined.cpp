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

// Fully unrolled datapaths: 44 round circuits fed by a fully unrolled key
// schedule. Variants differ only in the registers placed between rounds.
//
//   unrolled     port -> 44 rounds -> output register
//   outer-pipe   port -> round 0 -> reg -> ... -> reg -> round 43 -> output
//                (43 inter-round registers)
//   mixed-pipe   port -> input register -> K=2 round -> reg -> ... -> output
//
// Decryption swaps the words at the port and at the output and taps the key
// wires in reverse order; a mode bit travels with each block.

#include <cstdio>
#include <stdexcept>

#include "datapath.hpp"
#include "simon/arch/components.hpp"

namespace simon::arch {
namespace {

constexpr int kLastRound = kRounds - 1;
constexpr int kInterRound = kRounds - 1;

struct Stage {
  Block block{};
  bool valid = false;
  bool decrypt = false;
};

std::vector<std::string> numbered(const char* prefix, int count) {
  std::vector<std::string> names;
  names.reserve(count);
  char buf[32];
  for (int i = 0; i < count; ++i) {
    std::snprintf(buf, sizeof buf, "%s_%02d", prefix, i);
    names.emplace_back(buf);
  }
  return names;
}

class PipelinedDatapath final : public Datapath {
 public:
  PipelinedDatapath(const ArchConfig& config, const MasterKey& key)
      : kind_(config.kind),
        stage_names_(numbered("stage", kInterRound)),
        tap_names_(numbered("key_tap", kRounds)),
        gamma_names_(numbered("gamma", kRounds)),
        phi_names_(numbered("phi", kRounds)) {
    // Unrolled schedule: 40 chained expansion circuits off the key port.
    KeyCache cache = key.words;
    for (int j = 0; j < kKeyWords; ++j) keys_[j] = key.words[j];
    for (int i = 0; i < kExpansionSteps; ++i) {
      const KeyStep s = key_expand_step(cache, i);
      keys_[i + kKeyWords] = s.new_key;
      cache = s.next;
    }
    if (kind_ != ArchKind::FullUnrolled) pipe_.resize(kInterRound);
    if (mixed()) {
      gamma_.assign(kRounds, ClockedRegister<Word>(Edge::Falling));
      phi_.assign(kRounds, ClockedRegister<Word>(Edge::Falling));
      mid_valid_.assign(kRounds, false);
    }
  }

  void reset() override {
    input_.reset({});
    for (auto& r : pipe_) r.reset({});
    out_.reset({});
    for (auto& r : gamma_) r.reset(0);
    for (auto& r : phi_) r.reset(0);
    mid_valid_.assign(mid_valid_.size(), false);
  }

  bool ready() const override { return true; }
  bool out_valid() const override { return out_.q().valid; }
  Block out_block() const override { return out_.q().block; }
  bool key_ready() const override { return true; }
  bool needs_pre_expansion(Mode) const override { return false; }

  int round_stages() const override { return kRounds; }
  int inter_round_registers() const override {
    return static_cast<int>(pipe_.size());
  }

  std::vector<std::string> signal_names() const override {
    std::vector<std::string> names = {"in_block", "out_valid", "out_block"};
    names.insert(names.end(), tap_names_.begin(), tap_names_.end());
    names.insert(names.end(), stage_names_.begin(),
                 stage_names_.begin() + static_cast<long>(pipe_.size()));
    if (mixed()) {
      names.emplace_back("input_reg");
      names.insert(names.end(), gamma_names_.begin(), gamma_names_.end());
      names.insert(names.end(), phi_names_.begin(), phi_names_.end());
    }
    return names;
  }

 protected:
  void settle_before_falling(const Ports&) override {
    if (!mixed()) return;
    for (int j = 0; j < kRounds; ++j) {
      const Stage& s = source(j);
      gamma_[j].d(s.block.r ^ tap(j, s.decrypt));
      phi_[j].d(feistel_f(s.block.l));
      mid_valid_[j] = s.valid;
    }
  }

  void latch_falling() override {
    for (auto& r : gamma_) r.tick();
    for (auto& r : phi_) r.tick();
  }

  void settle_before_rising(const Ports& ports, Probe& probe) override {
    const Stage entering = from_port(ports);
    if (entering.valid) probe.block("in_block", ports.in);

    if (kind_ == ArchKind::FullUnrolled) {
      Stage s = entering;
      for (int j = 0; j < kRounds; ++j) {
        const Word k = tap(j, s.decrypt);
        if (s.valid) probe.word(tap_names_[j], k);
        s.block = round_enc(s.block, k);
      }
      out_.d(leave(s));
      return;
    }

    if (mixed()) input_.d(entering);
    for (int j = 0; j < kRounds; ++j) {
      const Stage s = j == 0 && !mixed() ? entering : source(j);
      const Word k = tap(j, s.decrypt);
      if (s.valid) probe.word(tap_names_[j], k);
      Stage r = s;
      r.block = mixed() ? Block{phi_[j].q() ^ gamma_[j].q(), s.block.l}
                        : round_enc(s.block, k);
      if (j < kLastRound) {
        pipe_[j].d(r);
      } else {
        out_.d(leave(r));
      }
    }
  }

  void latch_rising() override {
    input_.tick();
    for (auto& r : pipe_) r.tick();
    out_.tick();
  }

  void observe(Probe& probe) const override {
    if (!probe.enabled()) return;
    if (mixed()) {
      if (input_.q().valid) probe.block("input_reg", input_.q().block);
      for (int j = 0; j < kRounds; ++j) {
        if (!mid_valid_[j]) continue;
        probe.word(gamma_names_[j], gamma_[j].q());
        probe.word(phi_names_[j], phi_[j].q());
      }
    }
    for (std::size_t j = 0; j < pipe_.size(); ++j) {
      if (pipe_[j].q().valid) probe.block(stage_names_[j], pipe_[j].q().block);
    }
    probe.flag("out_valid", out_.q().valid);
    if (out_.q().valid) probe.block("out_block", out_.q().block);
  }

 private:
  bool mixed() const { return kind_ == ArchKind::MixedPipelined; }

  Word tap(int round, bool decrypt) const {
    return keys_[decrypt ? kLastRound - round : round];
  }

  // Block feeding round j. Round 0 of outer-pipe reads the port directly
  // and is handled by the caller.
  const Stage& source(int j) const {
    if (j == 0) return input_.q();
    return pipe_[j - 1].q();
  }

  static Stage from_port(const Ports& ports) {
    if (!ports.start) return {};
    if (ports.mode == Mode::PreExpand) {
      throw std::logic_error("unrolled datapaths have no pre-expansion phase");
    }
    const bool decrypt = ports.mode == Mode::Decrypt;
    return {decrypt ? swap_words(ports.in) : ports.in, true, decrypt};
  }

  static Stage leave(Stage s) {
    if (s.decrypt) s.block = swap_words(s.block);
    return s;
  }

  ArchKind kind_;
  std::vector<std::string> stage_names_;
  std::vector<std::string> tap_names_;
  std::vector<std::string> gamma_names_;
  std::vector<std::string> phi_names_;
  RoundKeys keys_{};
  ClockedRegister<Stage> input_;
  std::vector<ClockedRegister<Stage>> pipe_;
  ClockedRegister<Stage> out_;
  std::vector<ClockedRegister<Word>> gamma_;
  std::vector<ClockedRegister<Word>> phi_;
  std::vector<bool> mid_valid_;
};

}  // namespace

std::unique_ptr<Datapath> make_pipelined(const ArchConfig& config,
                                         const MasterKey& key) {
  return std::make_unique<PipelinedDatapath>(config, key);
}

}  // namespace simon::arch
