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

// Clocked building blocks shared by every datapath model.

#ifndef SIMON_ARCH_COMPONENTS_HPP_
#define SIMON_ARCH_COMPONENTS_HPP_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "simon/core.hpp"

namespace simon::arch {

enum class Edge { Rising, Falling };

/// Edge-triggered register. Combinational logic reads q() and drives d();
/// the value becomes visible only after tick() at the register's edge. An
/// undriven register holds its value.
template <typename T>
class ClockedRegister {
 public:
  explicit ClockedRegister(Edge edge = Edge::Rising, T init = T{})
      : edge_(edge), current_(init), next_(init) {}

  const T& q() const { return current_; }
  void d(const T& value) { next_ = value; }
  void tick() { current_ = next_; }

  void reset(const T& value) {
    current_ = value;
    next_ = value;
  }

  Edge edge() const { return edge_; }

 private:
  Edge edge_;
  T current_;
  T next_;
};

/// Round-key RAM: 44 word cells, one write port and one synchronous read
/// port. At each rising edge the read register captures the cell at the
/// presented address before the pending write lands (read-first), so a key
/// can be read back one cycle after the edge that wrote it.
class SyncRam {
 public:
  static constexpr int kCells = kRounds;

  void present_read(int address) {
    check(address);
    read_address_ = address;
  }

  void present_write(int address, Word data) {
    check(address);
    write_ = Write{address, data};
  }

  /// Value registered at the last edge.
  Word read_output() const { return read_output_; }

  /// Address captured at the last edge, i.e. the cell read_output() holds.
  int last_read_address() const { return latched_read_address_; }
  int presented_read_address() const { return read_address_; }
  std::optional<std::pair<int, Word>> pending_write() const {
    if (!write_) return std::nullopt;
    return std::pair{write_->address, write_->data};
  }

  const std::array<Word, kCells>& cells() const { return cells_; }

  void tick() {
    read_output_ = cells_[read_address_];
    latched_read_address_ = read_address_;
    if (write_) cells_[write_->address] = write_->data;
    write_.reset();
  }

  void reset() { *this = SyncRam{}; }

 private:
  struct Write {
    int address;
    Word data;
  };

  static void check(int address) {
    if (address < 0 || address >= kCells) {
      throw std::out_of_range("RAM address " + std::to_string(address));
    }
  }

  std::array<Word, kCells> cells_{};
  int read_address_ = 0;
  int latched_read_address_ = 0;
  Word read_output_ = 0;
  std::optional<Write> write_;
};

}  // namespace simon::arch

#endif  // SIMON_ARCH_COMPONENTS_HPP_
