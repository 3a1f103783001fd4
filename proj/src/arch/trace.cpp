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

#include "simon/arch/trace.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace simon::arch {

void CycleTrace::append(std::uint64_t cycle, std::string_view signal,
                        std::uint64_t value, int width) {
  if (!records_.empty() && cycle < records_.back().cycle) {
    throw std::logic_error("trace cycles must not decrease");
  }
  records_.push_back({cycle, std::string(signal), value, width});
}

CycleTrace CycleTrace::filter(std::span<const std::string> names) const {
  CycleTrace out;
  for (const auto& r : records_) {
    if (std::find(names.begin(), names.end(), r.signal) != names.end()) {
      out.records_.push_back(r);
    }
  }
  return out;
}

std::vector<TraceRecord> CycleTrace::of(std::string_view name) const {
  std::vector<TraceRecord> out;
  for (const auto& r : records_) {
    if (r.signal == name) out.push_back(r);
  }
  return out;
}

void CycleTrace::write(std::ostream& out) const {
  char hex[24];
  for (const auto& r : records_) {
    if (r.width == 64) {
      std::snprintf(hex, sizeof hex, "%016" PRIx64, r.value);
    } else {
      std::snprintf(hex, sizeof hex, "%08" PRIx64, r.value & 0xffffffffu);
    }
    out << r.cycle << ',' << r.signal << ',' << hex << '\n';
  }
}

std::string CycleTrace::to_text() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

}  // namespace simon::arch
