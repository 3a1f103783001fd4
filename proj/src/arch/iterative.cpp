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

// Iterative datapath: one combinational round, a 64-bit feedback register,
// a four-word key cache and the 44-cell round-key RAM. The same model covers
// the inner-round pipelined variants, which add falling-edge registers
// inside the round.
//
// Cycle plan (cycle 1 is the edge that samples the start pulse):
//
//   cache routing   1: load            2..45: rounds 0..43
//   RAM routing     1: load, emit k0   2: align, emit k1, read cell 0
//                                      3..46: rounds 0..43
//   separate        pre-expansion emits k0..k43 in cycles 1..44
//
// Integrated pre-expansion encrypts a zero block; with cache routing one
// more cycle is needed before the registered RAM output shows cell 43.

#include <stdexcept>

#include "datapath.hpp"
#include "simon/arch/components.hpp"

namespace simon::arch {
namespace {

enum class Phase : std::uint8_t { Idle, Align, Round, Fill, Expand };

constexpr int kLastRound = kRounds - 1;
constexpr int kLastCell = SyncRam::kCells - 1;

class IterativeDatapath final : public Datapath {
 public:
  IterativeDatapath(const ArchConfig& config, const MasterKey& key)
      : config_(config), key_(key) {
    reset();
  }

  void reset() override {
    state_.reset({});
    cache_.reset({});
    phase_.reset(Phase::Idle);
    round_.reset(0);
    gen_.reset(0);
    mode_.reset(Mode::Encrypt);
    bogus_.reset(false);
    out_valid_.reset(false);
    key_ready_.reset(false);
    gamma_.reset(0);
    phi_.reset(0);
    ram_.reset();
  }

  bool ready() const override { return phase_.q() == Phase::Idle; }
  bool out_valid() const override { return out_valid_.q(); }
  Block out_block() const override {
    return mode_.q() == Mode::Decrypt ? swap_words(state_.q()) : state_.q();
  }
  bool key_ready() const override { return key_ready_.q(); }

  bool needs_pre_expansion(Mode mode) const override {
    return separate() || mode == Mode::Decrypt;
  }

  int round_stages() const override { return 1; }
  int inter_round_registers() const override { return 0; }

  std::vector<std::string> signal_names() const override {
    std::vector<std::string> names = {
        "state",      "round_index", "round_key",  "key_cache0",
        "key_cache1", "key_cache2",  "key_cache3", "ram_raddr",
        "ram_rdata",  "ram_waddr",   "ram_wdata",  "out_valid",
        "out_block",  "key_ready",
    };
    if (config_.inner_k >= 1) names.emplace_back("gamma");
    if (config_.inner_k == 2) names.emplace_back("phi");
    return names;
  }

 protected:
  void settle_before_falling(const Ports&) override {
    if (config_.inner_k == 0) return;
    const Block s = state_.q();
    gamma_.d(s.r ^ round_key());
    if (config_.inner_k == 2) phi_.d(feistel_f(s.l));
  }

  void latch_falling() override {
    gamma_.tick();
    phi_.tick();
  }

  void settle_before_rising(const Ports& ports, Probe& probe) override {
    out_valid_.d(false);
    switch (phase_.q()) {
      case Phase::Idle:
        // Parked on the last cell so a decryption can start immediately.
        if (cache_routed()) present_read(kLastCell, probe);
        if (ports.start) start(ports, probe);
        break;
      case Phase::Align:
        present_read(mode_.q() == Mode::Decrypt ? kLastCell : 0, probe);
        if (generating()) generate(gen_.q(), probe);
        phase_.d(Phase::Round);
        break;
      case Phase::Round:
        round(probe);
        break;
      case Phase::Fill:
        present_read(kLastCell, probe);
        key_ready_.d(true);
        phase_.d(Phase::Idle);
        break;
      case Phase::Expand:
        generate(gen_.q(), probe);
        if (gen_.q() == kLastCell) {
          key_ready_.d(true);
          phase_.d(Phase::Idle);
        }
        break;
    }
  }

  void latch_rising() override {
    state_.tick();
    cache_.tick();
    phase_.tick();
    round_.tick();
    gen_.tick();
    mode_.tick();
    bogus_.tick();
    out_valid_.tick();
    key_ready_.tick();
    ram_.tick();
  }

  void observe(Probe& probe) const override {
    if (!probe.enabled()) return;
    probe.block("state", state_.q());
    const KeyCache& c = cache_.q();
    probe.word("key_cache0", c[0]);
    probe.word("key_cache1", c[1]);
    probe.word("key_cache2", c[2]);
    probe.word("key_cache3", c[3]);
    probe.word("ram_rdata", ram_.read_output());
    probe.flag("out_valid", out_valid_.q());
    if (out_valid_.q()) probe.block("out_block", out_block());
    probe.flag("key_ready", key_ready_.q());
    if (config_.inner_k >= 1) probe.word("gamma", gamma_.q());
    if (config_.inner_k == 2) probe.word("phi", phi_.q());
  }

 private:
  bool cache_routed() const { return config_.routing == KeyRouting::Cache; }
  bool separate() const {
    return config_.pre_expansion == PreExpansion::Separate;
  }
  // Integrated RAM routing expands the key alongside every encryption.
  bool generating() const {
    return !separate() && !cache_routed() && mode_.q() != Mode::Decrypt;
  }

  Word round_key() const {
    return cache_routed() ? cache_.q()[0] : ram_.read_output();
  }

  Block round_output(Word key) const {
    const Block s = state_.q();
    switch (config_.inner_k) {
      case 1:
        return {feistel_f(s.l) ^ gamma_.q(), s.l};
      case 2:
        return {phi_.q() ^ gamma_.q(), s.l};
      default:
        return round_enc(s, key);
    }
  }

  void present_read(int address, Probe& probe) {
    ram_.present_read(address);
    probe.word("ram_raddr", static_cast<Word>(address));
  }

  void write_ram(int address, Word data, Probe& probe) {
    ram_.present_write(address, data);
    probe.word("ram_waddr", static_cast<Word>(address));
    probe.word("ram_wdata", data);
  }

  // RAM-routed key generator: the master words pass straight through, later
  // keys come from the schedule circuit and also shift into the cache.
  void generate(int index, Probe& probe) {
    Word fresh;
    if (index < kKeyWords) {
      fresh = key_.words[index];
    } else {
      const KeyStep s = key_expand_step(cache_.q(), index - kKeyWords);
      fresh = s.new_key;
      cache_.d(s.next);
    }
    write_ram(index, fresh, probe);
    gen_.d(index + 1);
  }

  void start(const Ports& ports, Probe& probe) {
    Mode mode = ports.mode;
    Block in = ports.in;
    bool bogus = false;
    if (mode == Mode::PreExpand) {
      if (separate()) {
        mode_.d(Mode::PreExpand);
        cache_.d(key_.words);
        generate(0, probe);
        phase_.d(Phase::Expand);
        return;
      }
      mode = Mode::Encrypt;
      in = Block{};
      bogus = true;
    }
    if ((mode == Mode::Decrypt || separate()) && !key_ready_.q()) {
      throw std::logic_error("round-key RAM used before pre-expansion");
    }

    mode_.d(mode);
    bogus_.d(bogus);
    round_.d(0);
    state_.d(mode == Mode::Decrypt ? swap_words(in) : in);

    if (cache_routed()) {
      if (mode == Mode::Decrypt) {
        KeyCache c = cache_.q();
        c[0] = ram_.read_output();
        cache_.d(c);
        present_read(kLastCell - 1, probe);
      } else {
        cache_.d(key_.words);
      }
      phase_.d(Phase::Round);
      return;
    }

    if (!separate() && mode == Mode::Encrypt) {
      cache_.d(key_.words);
      generate(0, probe);
    }
    phase_.d(Phase::Align);
  }

  void round(Probe& probe) {
    const int i = round_.q();
    const Word key = round_key();
    probe.word("round_index", static_cast<Word>(i));
    probe.word("round_key", key);
    state_.d(round_output(key));

    const bool decrypt = mode_.q() == Mode::Decrypt;
    if (cache_routed()) {
      KeyCache c = cache_.q();
      if (decrypt) {
        // First cache word is reloaded from RAM, two cells ahead of use.
        c[0] = ram_.read_output();
        cache_.d(c);
        present_read(i + 2 <= kLastRound ? kLastRound - 2 - i : kLastCell,
                     probe);
      } else {
        write_ram(i, c[0], probe);
        const Word fresh =
            i < kExpansionSteps ? key_expand_step(c, i).new_key : Word{0};
        cache_.d({c[1], c[2], c[3], fresh});
      }
    } else {
      if (i < kLastRound) {
        present_read(decrypt ? kLastRound - 1 - i : i + 1, probe);
      }
      if (generating() && gen_.q() < kRounds) generate(gen_.q(), probe);
    }

    round_.d(i + 1);
    if (i == kLastRound) {
      if (!bogus_.q()) {
        out_valid_.d(true);
        phase_.d(Phase::Idle);
      } else if (cache_routed()) {
        phase_.d(Phase::Fill);
      } else {
        key_ready_.d(true);
        phase_.d(Phase::Idle);
      }
    }
  }

  ArchConfig config_;
  MasterKey key_;

  ClockedRegister<Block> state_;
  ClockedRegister<KeyCache> cache_;
  ClockedRegister<Phase> phase_;
  ClockedRegister<int> round_;
  ClockedRegister<int> gen_;
  ClockedRegister<Mode> mode_;
  ClockedRegister<bool> bogus_;
  ClockedRegister<bool> out_valid_;
  ClockedRegister<bool> key_ready_;
  ClockedRegister<Word> gamma_{Edge::Falling};
  ClockedRegister<Word> phi_{Edge::Falling};
  SyncRam ram_;
};

}  // namespace

std::unique_ptr<Datapath> make_iterative(const ArchConfig& config,
                                         const MasterKey& key) {
  return std::make_unique<IterativeDatapath>(config, key);
}

}  // namespace simon::arch
