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

#ifndef SIMON_ARCH_TRACE_HPP_
#define SIMON_ARCH_TRACE_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simon::arch {

struct TraceRecord {
  std::uint64_t cycle;
  std::string signal;
  std::uint64_t value;
  int width;  // 32 or 64

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

/// Per-cycle signal log. Cycle numbers never decrease.
class CycleTrace {
 public:
  void append(std::uint64_t cycle, std::string_view signal,
              std::uint64_t value, int width);

  const std::vector<TraceRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }
  std::size_t size() const { return records_.size(); }
  void clear() { records_.clear(); }

  /// Records whose signal is one of `names`, in original order.
  CycleTrace filter(std::span<const std::string> names) const;

  /// Records of a single signal.
  std::vector<TraceRecord> of(std::string_view name) const;

  /// `cycle,signal,hex` lines: 8 hex digits for 32-bit signals, 16 for
  /// 64-bit ones.
  void write(std::ostream& out) const;
  std::string to_text() const;

  friend bool operator==(const CycleTrace&, const CycleTrace&) = default;

 private:
  std::vector<TraceRecord> records_;
};

}  // namespace simon::arch

#endif  // SIMON_ARCH_TRACE_HPP_
