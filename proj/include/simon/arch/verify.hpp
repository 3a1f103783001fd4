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

#ifndef SIMON_ARCH_VERIFY_HPP_
#define SIMON_ARCH_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "simon/arch/config.hpp"
#include "simon/core.hpp"

namespace simon::arch {

struct Counterexample {
  std::uint64_t seed;
  std::size_t index;
  Mode mode;
  MasterKey key;
  Block input;
  Block expected;
  Block actual;
};

struct VerificationReport {
  ArchConfig config;
  std::size_t n_vectors = 0;
  std::uint64_t seed = 0;
  std::optional<Counterexample> failure;

  bool passed() const { return !failure.has_value(); }
};

/// Expected output of `mode` applied to `input` under `key`.
using ReferenceFn = std::function<Block(Mode, Block, const MasterKey&)>;

/// Runs n_vectors seeded (key, plaintext) pairs through a fresh machine in
/// both modes and compares against the word-level cipher. Stops at the
/// first mismatch. Throws std::invalid_argument if n_vectors is 0.
VerificationReport verify_vs_reference(const ArchConfig& config,
                                       std::size_t n_vectors,
                                       std::uint64_t seed);

/// Same, against a caller-supplied reference.
VerificationReport verify_against(const ArchConfig& config,
                                  std::size_t n_vectors, std::uint64_t seed,
                                  const ReferenceFn& reference);

/// One-line summary, e.g. "unrolled: pass (1000 vectors, seed 7)".
std::string describe(const VerificationReport& report);

}  // namespace simon::arch

#endif  // SIMON_ARCH_VERIFY_HPP_
