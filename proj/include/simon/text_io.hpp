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

// Hex text conventions: words are 8 lowercase hex digits, blocks print as
// "l r", keys print as "k3 k2 k1 k0".

#ifndef SIMON_TEXT_IO_HPP_
#define SIMON_TEXT_IO_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "simon/core.hpp"

namespace simon::io {

/// Malformed input, carrying the 1-based line number when known (0 if not).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::string hex_word(Word w);
std::string hex_block(Block b);
std::string hex_key(const MasterKey& key);

/// Exactly eight hex digits, either case.
std::optional<Word> parse_word(std::string_view text);

/// Four words in printed order (k3 first). Throws ParseError.
MasterKey parse_key(std::span<const std::string> words);

/// Two words "l r". Throws ParseError.
Block parse_block(std::span<const std::string> words);

/// One "l r" pair per line; blank lines and '#' comments are skipped.
/// Throws ParseError naming the line.
std::vector<Block> read_blocks(std::istream& in);

}  // namespace simon::io

#endif  // SIMON_TEXT_IO_HPP_
