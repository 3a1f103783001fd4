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

#include "simon/arch/verify.hpp"

#include <array>
#include <random>
#include <stdexcept>

#include "simon/arch/machine.hpp"
#include "simon/text_io.hpp"

namespace simon::arch {
namespace {

Block reference_cipher(Mode mode, Block input, const MasterKey& key) {
  return mode == Mode::Decrypt ? decrypt_block(input, key)
                               : encrypt_block(input, key);
}

}  // namespace

VerificationReport verify_vs_reference(const ArchConfig& config,
                                       std::size_t n_vectors,
                                       std::uint64_t seed) {
  return verify_against(config, n_vectors, seed, reference_cipher);
}

VerificationReport verify_against(const ArchConfig& config,
                                  std::size_t n_vectors, std::uint64_t seed,
                                  const ReferenceFn& reference) {
  if (n_vectors == 0) {
    throw std::invalid_argument("verification needs at least one vector");
  }
  validate(config);
  VerificationReport report{config, n_vectors, seed, std::nullopt};

  // Raw engine output only: distributions are not portable across
  // standard libraries, the engine sequence is.
  std::mt19937_64 rng(seed);
  auto split = [](std::uint64_t v) {
    return std::pair{static_cast<Word>(v >> 32), static_cast<Word>(v)};
  };

  for (std::size_t i = 0; i < n_vectors; ++i) {
    const auto [k3, k2] = split(rng());
    const auto [k1, k0] = split(rng());
    const auto [l, r] = split(rng());
    const MasterKey key = MasterKey::from_printed(k3, k2, k1, k0);
    const Block plaintext{l, r};

    SimMachine machine(config, key);
    machine.set_recording(false);

    const Block ciphertext = reference(Mode::Encrypt, plaintext, key);
    const std::array<std::pair<Mode, Block>, 2> jobs = {
        std::pair{Mode::Encrypt, plaintext},
        std::pair{Mode::Decrypt, ciphertext},
    };
    for (const auto& [mode, input] : jobs) {
      const Block expected = reference(mode, input, key);
      const Block actual = machine.run_job(mode, {&input, 1}).outputs.at(0);
      if (actual != expected) {
        report.failure =
            Counterexample{seed, i, mode, key, input, expected, actual};
        return report;
      }
    }
  }
  return report;
}

std::string describe(const VerificationReport& report) {
  std::string line = arch_name(report.config) + ": ";
  if (report.passed()) {
    return line + "pass (" + std::to_string(report.n_vectors) +
           " vectors, seed " + std::to_string(report.seed) + ")";
  }
  const Counterexample& c = *report.failure;
  return line + "FAIL seed=" + std::to_string(c.seed) +
         " index=" + std::to_string(c.index) + " mode=" +
         std::string(mode_name(c.mode)) + " key=" + io::hex_key(c.key) +
         " input=" + io::hex_block(c.input) +
         " expected=" + io::hex_block(c.expected) +
         " actual=" + io::hex_block(c.actual);
}

}  // namespace simon::arch
