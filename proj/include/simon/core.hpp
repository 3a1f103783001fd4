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

#ifndef SIMON_CORE_HPP_
#define SIMON_CORE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

// SIMON64/128: 32-bit words, 64-bit blocks, 128-bit keys, 44 rounds.
namespace simon {

using Word = std::uint32_t;

inline constexpr int kWordBits = 32;
inline constexpr int kBlockBits = 64;
inline constexpr int kKeyWords = 4;
inline constexpr int kRounds = 44;
inline constexpr int kExpansionSteps = kRounds - kKeyWords;  // 40
inline constexpr int kZ3Length = 62;

// c = 2^32 - 4.
inline constexpr Word kKeyConstant = 0xFFFFFFFCu;

// The z3 sequence as written in its usual little-endian notation: the last
// character is sequence bit 0. Read this way the schedule reproduces the
// published SIMON64/128 test vector.
inline constexpr std::string_view kZ3Literal =
    "11110000101100111001010001001000000111101001100011010111011011";

/// One 64-bit block. `l` is the word fed through the nonlinear function
/// during encryption.
struct Block {
  Word l = 0;
  Word r = 0;

  friend constexpr bool operator==(const Block&, const Block&) = default;
};

constexpr Block swap_words(Block b) { return {b.r, b.l}; }

constexpr std::uint64_t to_u64(Block b) {
  return (std::uint64_t{b.l} << 32) | b.r;
}

constexpr Block block_from_u64(std::uint64_t v) {
  return {static_cast<Word>(v >> 32), static_cast<Word>(v)};
}

/// Master key words k0..k3; k0 is the first round key consumed by
/// encryption. The conventional printed order is k3 k2 k1 k0.
struct MasterKey {
  std::array<Word, kKeyWords> words{};

  /// Builds a key from words in printed order (k3 first).
  static constexpr MasterKey from_printed(Word k3, Word k2, Word k1, Word k0) {
    return MasterKey{{k0, k1, k2, k3}};
  }

  friend constexpr bool operator==(const MasterKey&,
                                   const MasterKey&) = default;
};

/// Sliding window over the four most recent round keys (k_i .. k_{i+3}).
using KeyCache = std::array<Word, kKeyWords>;

/// All 44 round keys; index = round number.
using RoundKeys = std::array<Word, kRounds>;

// Rotations reject counts outside 0..31 with std::out_of_range.
Word rol(Word x, int count);
Word ror(Word x, int count);

/// (S^1(l) & S^8(l)) ^ S^2(l)
Word feistel_f(Word l);

Block round_enc(Block b, Word k);
Block round_dec(Block b, Word k);

/// Bit i of z3. Throws std::out_of_range for i outside 0..61.
int z3_bit(int i);

/// c ^ z3_i folded into one word. Valid for the 40 expansion steps only.
Word round_constant(int i);

struct KeyStep {
  Word new_key;
  KeyCache next;
};

/// One key-expansion step for generation index i (0..39): produces k_{i+4}
/// from the cache (k_i, k_{i+1}, k_{i+2}, k_{i+3}) and shifts it in.
KeyStep key_expand_step(const KeyCache& cache, int i);

RoundKeys expand_key(const MasterKey& mk);

Block encrypt_block(Block p, const MasterKey& mk);
Block decrypt_block(Block c, const MasterKey& mk);

// Variants taking a pre-expanded schedule, used on hot paths.
Block encrypt_with(Block p, const RoundKeys& keys);
Block decrypt_with(Block c, const RoundKeys& keys);

/// Decryption written as round_dec over reversed keys, without the word
/// swaps. Must agree with decrypt_with for every input.
Block decrypt_inverse_form(Block c, const RoundKeys& keys);

}  // namespace simon

#endif  // SIMON_CORE_HPP_
