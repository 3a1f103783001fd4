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

#include "simon/text_io.hpp"

#include <cstdio>
#include <istream>
#include <sstream>

namespace simon::io {
namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

Word require_word(std::string_view text, std::size_t line) {
  auto w = parse_word(text);
  if (!w) {
    std::string where = line ? "line " + std::to_string(line) + ": " : "";
    throw ParseError(line, where + "expected 8 hex digits, got '" +
                               std::string(text) + "'");
  }
  return *w;
}

}  // namespace

std::string hex_word(Word w) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(w));
  return buf;
}

std::string hex_block(Block b) { return hex_word(b.l) + ' ' + hex_word(b.r); }

std::string hex_key(const MasterKey& key) {
  const auto& k = key.words;
  return hex_word(k[3]) + ' ' + hex_word(k[2]) + ' ' + hex_word(k[1]) + ' ' +
         hex_word(k[0]);
}

std::optional<Word> parse_word(std::string_view text) {
  if (text.size() != 8) return std::nullopt;
  Word w = 0;
  for (char c : text) {
    const int d = hex_digit(c);
    if (d < 0) return std::nullopt;
    w = (w << 4) | static_cast<Word>(d);
  }
  return w;
}

MasterKey parse_key(std::span<const std::string> words) {
  if (words.size() != kKeyWords) {
    throw ParseError(0, "key needs 4 words (k3 k2 k1 k0), got " +
                            std::to_string(words.size()));
  }
  return MasterKey::from_printed(
      require_word(words[0], 0), require_word(words[1], 0),
      require_word(words[2], 0), require_word(words[3], 0));
}

Block parse_block(std::span<const std::string> words) {
  if (words.size() != 2) {
    throw ParseError(0, "block needs 2 words (l r), got " +
                            std::to_string(words.size()));
  }
  return {require_word(words[0], 0), require_word(words[1], 0)};
}

std::vector<Block> read_blocks(std::istream& in) {
  std::vector<Block> blocks;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> words;
    for (std::string w; fields >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words.size() != 2) {
      throw ParseError(number, "line " + std::to_string(number) +
                                   ": expected \"l r\" hex pair");
    }
    blocks.push_back(
        {require_word(words[0], number), require_word(words[1], number)});
  }
  return blocks;
}

}  // namespace simon::io
