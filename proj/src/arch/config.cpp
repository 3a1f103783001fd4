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

#include "simon/arch/config.hpp"

#include <stdexcept>

namespace simon::arch {

void validate(const ArchConfig& config) {
  switch (config.kind) {
    case ArchKind::Iterative:
      if (config.inner_k != 0) {
        throw std::invalid_argument("iterative datapath has no inner registers");
      }
      if (config.pre_expansion == PreExpansion::Separate &&
          config.routing == KeyRouting::Cache) {
        throw std::invalid_argument(
            "separate pre-expansion requires RAM routing");
      }
      return;
    case ArchKind::InnerPipelined:
      if (config.inner_k != 1 && config.inner_k != 2) {
        throw std::invalid_argument("inner pipelining supports K = 1 or 2");
      }
      if (config.pre_expansion != PreExpansion::Integrated ||
          config.routing != KeyRouting::Cache) {
        throw std::invalid_argument(
            "inner pipelining builds on integrated cache routing");
      }
      return;
    case ArchKind::MixedPipelined:
      if (config.inner_k != 2) {
        throw std::invalid_argument("mixed pipelining uses K_i = 2");
      }
      return;
    case ArchKind::FullUnrolled:
    case ArchKind::OuterPipelined:
      if (config.inner_k != 0) {
        throw std::invalid_argument("unrolled rounds have no inner registers");
      }
      return;
  }
  throw std::invalid_argument("unknown architecture kind");
}

bool is_iterative_family(const ArchConfig& config) {
  return config.kind == ArchKind::Iterative ||
         config.kind == ArchKind::InnerPipelined;
}

bool is_pipelined(const ArchConfig& config) {
  return config.kind == ArchKind::OuterPipelined ||
         config.kind == ArchKind::MixedPipelined;
}

ArchConfig parse_arch(std::string_view name) {
  if (name == "iter-cache") {
    return ArchConfig::iterative(PreExpansion::Integrated, KeyRouting::Cache);
  }
  if (name == "iter-ram") {
    return ArchConfig::iterative(PreExpansion::Integrated, KeyRouting::Ram);
  }
  if (name == "iter-separate") {
    return ArchConfig::iterative(PreExpansion::Separate, KeyRouting::Ram);
  }
  if (name == "unrolled") return ArchConfig::unrolled();
  if (name == "outer-pipe") return ArchConfig::outer_pipelined();
  if (name == "inner-pipe-1") return ArchConfig::inner_pipelined(1);
  if (name == "inner-pipe-2") return ArchConfig::inner_pipelined(2);
  if (name == "mixed-pipe") return ArchConfig::mixed_pipelined();
  throw std::invalid_argument("unknown architecture '" + std::string(name) +
                              "'");
}

std::string arch_name(const ArchConfig& config) {
  validate(config);
  switch (config.kind) {
    case ArchKind::Iterative:
      if (config.pre_expansion == PreExpansion::Separate) {
        return "iter-separate";
      }
      return config.routing == KeyRouting::Cache ? "iter-cache" : "iter-ram";
    case ArchKind::FullUnrolled:
      return "unrolled";
    case ArchKind::OuterPipelined:
      return "outer-pipe";
    case ArchKind::InnerPipelined:
      return config.inner_k == 1 ? "inner-pipe-1" : "inner-pipe-2";
    case ArchKind::MixedPipelined:
      return "mixed-pipe";
  }
  return "unknown";
}

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::Encrypt:
      return "encrypt";
    case Mode::Decrypt:
      return "decrypt";
    case Mode::PreExpand:
      return "pre-expand";
  }
  return "unknown";
}

}  // namespace simon::arch
