#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sboxkit/chaos.hpp"
#include "sboxkit/sbox.hpp"

// The chaotic irreversible key expansion plus reference AES-128 and SM4 key
// schedules with explicit inversion routines. The AES/SM4 inversions are
// the executable form of the reversibility weakness the chaotic schedule
// removes: discarded hex digits make round keys many-to-one images of the
// map state.

namespace sboxkit {

struct RoundKey {
  std::vector<std::uint8_t> bytes;
  int index = 0;  // 1-based round number
};

struct KeyScheduleConfig {
  int rounds = 16;
  int width_bytes = 32;  // 32, 64 or 128
  bool keyed_sbox = false;
};

struct KeySchedule {
  std::vector<RoundKey> round_keys;
  KeyScheduleConfig config;
};

// Seeds the 2D-ECM from the key, then per round draws width/4 state pairs.
// Each pair contributes floor(x*16^6) and floor(y*16^6) as 6 hex digits
// apiece; the middle 8 of those 12 digits (positions 3..10) become 4 round
// key bytes. Map state persists across rounds. With keyed_sbox, every
// output byte passes through a strong S-Box constructed from the same key.
KeySchedule expand_keys(const InitialKey& ik, int rounds, int width_bytes = 32,
                        bool keyed_sbox = false);

int hamming_distance(const std::vector<std::uint8_t>& a,
                     const std::vector<std::uint8_t>& b);

struct HammingStats {
  std::vector<int> distances;  // per round, vs the initial key
  double mean = 0.0;
};

HammingStats hamming_stats(const InitialKey& ik, int rounds,
                           bool keyed_sbox = false);

// ---- AES-128 reference schedule (FIPS-197) and its inversion ----

using AesKey = std::array<std::uint8_t, 16>;

extern const std::array<std::uint8_t, 10> kAesRoundConstants;

// 11 round keys; index 0 is the cipher key itself.
std::vector<AesKey> aes_expand(const AesKey& key);

// Runs the schedule recursion backwards from the round key at round_index
// (0..10) to recover the cipher key.
AesKey aes_recover(const AesKey& round_key, int round_index);

// ---- SM4 reference schedule (GB/T 32907) and its inversion ----

using Sm4Key = std::array<std::uint8_t, 16>;

// 32 32-bit round keys.
std::array<std::uint32_t, 32> sm4_expand(const Sm4Key& mk);

// Recovers the master key from rk[start_index .. start_index+3]
// (start_index in [0, 28]).
Sm4Key sm4_recover(const std::array<std::uint32_t, 4>& window,
                   int start_index);

// Index-checked variant: the four 4-byte round keys must carry consecutive
// 1-based indices.
Sm4Key sm4_recover(const std::vector<RoundKey>& window);

// Table-6-style rendering: round index, uppercase hex, optional distance.
std::string render_schedule(const KeySchedule& ks, const InitialKey* ik);

}  // namespace sboxkit
