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

#include "simon/core.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace simon {
namespace {

void check_rotation(int count) {
  if (count < 0 || count >= kWordBits) {
    throw std::out_of_range("rotation count " + std::to_string(count) +
                            " outside 0..31");
  }
}

// Packs the literal so that bit i of the result is z3_i.
constexpr std::uint64_t pack_z3() {
  std::uint64_t bits = 0;
  for (char c : kZ3Literal) {
    bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return bits;
}

constexpr std::uint64_t kZ3Bits = pack_z3();

static_assert(kZ3Literal.size() == kZ3Length);
// Same sequence as the 0xfc2ce51207a635db constant used by other SIMON
// implementations (whose top two bits are padding).
static_assert(kZ3Bits == (0xfc2ce51207a635dbull & ((1ull << kZ3Length) - 1)));

}  // namespace

Word rol(Word x, int count) {
  check_rotation(count);
  return std::rotl(x, count);
}

Word ror(Word x, int count) {
  check_rotation(count);
  return std::rotr(x, count);
}

Word feistel_f(Word l) {
  return (std::rotl(l, 1) & std::rotl(l, 8)) ^ std::rotl(l, 2);
}

Block round_enc(Block b, Word k) { return {feistel_f(b.l) ^ b.r ^ k, b.l}; }

Block round_dec(Block b, Word k) { return {b.r, feistel_f(b.r) ^ b.l ^ k}; }

int z3_bit(int i) {
  if (i < 0 || i >= kZ3Length) {
    throw std::out_of_range("z3 index " + std::to_string(i) +
                            " outside 0..61");
  }
  return static_cast<int>((kZ3Bits >> i) & 1u);
}

Word round_constant(int i) {
  if (i < 0 || i >= kExpansionSteps) {
    throw std::out_of_range("key expansion index " + std::to_string(i) +
                            " outside 0..39");
  }
  return kKeyConstant ^ static_cast<Word>(z3_bit(i));
}

KeyStep key_expand_step(const KeyCache& cache, int i) {
  const Word constant = round_constant(i);
  const Word f = std::rotr(cache[3], 3) ^ cache[1];
  const Word fresh = f ^ std::rotr(f, 1) ^ cache[0] ^ constant;
  return {fresh, KeyCache{cache[1], cache[2], cache[3], fresh}};
}

RoundKeys expand_key(const MasterKey& mk) {
  RoundKeys keys{};
  KeyCache cache = mk.words;
  for (int j = 0; j < kKeyWords; ++j) keys[j] = mk.words[j];
  for (int i = 0; i < kExpansionSteps; ++i) {
    auto step = key_expand_step(cache, i);
    keys[i + kKeyWords] = step.new_key;
    cache = step.next;
  }
  return keys;
}

Block encrypt_with(Block p, const RoundKeys& keys) {
  for (Word k : keys) p = round_enc(p, k);
  return p;
}

Block decrypt_with(Block c, const RoundKeys& keys) {
  Block b = swap_words(c);
  for (int i = kRounds - 1; i >= 0; --i) b = round_enc(b, keys[i]);
  return swap_words(b);
}

Block decrypt_inverse_form(Block c, const RoundKeys& keys) {
  for (int i = kRounds - 1; i >= 0; --i) c = round_dec(c, keys[i]);
  return c;
}

Block encrypt_block(Block p, const MasterKey& mk) {
  return encrypt_with(p, expand_key(mk));
}

Block decrypt_block(Block c, const MasterKey& mk) {
  return decrypt_with(c, expand_key(mk));
}

}  // namespace simon
