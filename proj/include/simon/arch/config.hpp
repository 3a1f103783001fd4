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

#ifndef SIMON_ARCH_CONFIG_HPP_
#define SIMON_ARCH_CONFIG_HPP_

#include <array>
#include <string>
#include <string_view>

namespace simon::arch {

enum class ArchKind {
  Iterative,
  FullUnrolled,
  OuterPipelined,
  InnerPipelined,
  MixedPipelined,
};

/// Where the decryption key pre-expansion happens in iterative designs.
enum class PreExpansion {
  Integrated,  // keys land in RAM while encrypting; decryption first
               // encrypts a bogus block
  Separate,    // dedicated 44-cycle expansion phase before any operation
};

/// How round keys travel from the key schedule to the round function.
enum class KeyRouting {
  Ram,    // schedule -> RAM -> round (one cycle delay)
  Cache,  // first word of the key cache feeds the round directly
};

enum class Mode { Encrypt, Decrypt, PreExpand };

struct ArchConfig {
  ArchKind kind = ArchKind::Iterative;
  PreExpansion pre_expansion = PreExpansion::Integrated;
  KeyRouting routing = KeyRouting::Cache;
  // Inner-round registers per round: 0 for plain rounds, 1 (after gamma) or
  // 2 (after gamma and phi).
  int inner_k = 0;

  static constexpr ArchConfig iterative(PreExpansion p, KeyRouting r) {
    return {ArchKind::Iterative, p, r, 0};
  }
  static constexpr ArchConfig unrolled() {
    return {ArchKind::FullUnrolled, PreExpansion::Integrated,
            KeyRouting::Cache, 0};
  }
  static constexpr ArchConfig outer_pipelined() {
    return {ArchKind::OuterPipelined, PreExpansion::Integrated,
            KeyRouting::Cache, 0};
  }
  static constexpr ArchConfig inner_pipelined(int k) {
    return {ArchKind::InnerPipelined, PreExpansion::Integrated,
            KeyRouting::Cache, k};
  }
  static constexpr ArchConfig mixed_pipelined() {
    return {ArchKind::MixedPipelined, PreExpansion::Integrated,
            KeyRouting::Cache, 2};
  }

  friend constexpr bool operator==(const ArchConfig&,
                                   const ArchConfig&) = default;
};

/// Throws std::invalid_argument for combinations that have no datapath,
/// e.g. separate pre-expansion with cache routing.
void validate(const ArchConfig& config);

bool is_iterative_family(const ArchConfig& config);
bool is_pipelined(const ArchConfig& config);

/// The eight command-line names, in canonical order.
inline constexpr std::array<std::string_view, 8> kArchNames = {
    "iter-cache", "iter-ram",     "iter-separate", "unrolled",
    "outer-pipe", "inner-pipe-1", "inner-pipe-2",  "mixed-pipe",
};

/// Throws std::invalid_argument for unknown names.
ArchConfig parse_arch(std::string_view name);
std::string arch_name(const ArchConfig& config);

std::string_view mode_name(Mode mode);

}  // namespace simon::arch

#endif  // SIMON_ARCH_CONFIG_HPP_
