#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sboxkit/chaos.hpp"

// The S-Box type (a validated permutation of the byte values), the chaotic
// construction algorithm, structural weakness analysis (fixed points,
// reverse fixed points, cycle rings) and the corpus of published tables.

namespace sboxkit {

class construction_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SBox {
 public:
  static constexpr int kSize = 256;

  // Validates bijectivity; the diagnostic names the first duplicated value.
  explicit SBox(const std::array<std::uint8_t, 256>& table,
                std::string name = {});

  std::uint8_t operator[](std::uint8_t x) const {
    return table_[static_cast<std::size_t>(x)];
  }
  const std::array<std::uint8_t, 256>& table() const { return table_; }
  const std::string& name() const { return name_; }

  bool operator==(const SBox& other) const { return table_ == other.table_; }

 private:
  std::array<std::uint8_t, 256> table_;
  std::string name_;
};

SBox identity_sbox();

// cycles are each rotated so the smallest member leads, and listed in
// ascending (length, head) order; members partition 0..255
struct CycleStructure {
  std::vector<std::vector<std::uint8_t>> cycles;

  std::vector<std::size_t> lengths() const;
};

struct StructuralReport {
  std::vector<std::uint8_t> fixed_points;          // S(i) == i
  std::vector<std::uint8_t> reverse_fixed_points;  // S(i) == 255 - i
  CycleStructure cycles;
};

StructuralReport structural_report(const SBox& s);

// no fixed point, no reverse fixed point, and one full 256-cycle
bool is_strong(const SBox& s);

enum class BuiltinSBox { Aes, Sm4, Skipjack, Whirlpool, ZucS0, ZucS1, PaperTable4 };

SBox builtin_sbox(BuiltinSBox which);
// accepts aes | sm4 | skipjack | whirlpool | zuc_s0 | zuc_s1 | paper_table4
SBox builtin_sbox(std::string_view name);
std::vector<std::string> builtin_sbox_names();

struct ConstructionConfig {
  long n0 = 560;          // initial draw count, Step 1
  long transient = 300;   // discarded iterates before drawing
  long max_retries = 1000;
};

// ctr is the shared retry counter bumped by both the shortfall path and the
// structural-failure path, so n_samples = n0 + 100*ctr at every attempt.
struct ConstructionTrace {
  long ctr = 0;
  long n_samples = 0;
  long restarts = 0;  // seed perturbations (structural failures)
  State2D final_seed{};
};

// Chaotic construction: draw N x-samples after the transient, map through
// floor(x * 10^16) mod 256, deduplicate keeping first occurrences; extend N
// on shortfall; on a structural failure perturb the seed with
// x0 = (x0 + ctr*y0) mod 1 and restart. The result always passes is_strong.
std::pair<SBox, ConstructionTrace> construct_sbox(
    const EcmParams& params, State2D s0, const ConstructionConfig& cfg = {});

// Text formats: a 16x16 grid of two-digit uppercase hex tokens (the
// published-table layout) and a JSON array of 256 integers.
std::string to_hex_grid(const SBox& s);
std::string to_json_list(const SBox& s);
// Accepts either format; diagnostics name duplicated values, bad tokens and
// wrong counts.
SBox parse_sbox_text(const std::string& text, std::string name = {});

std::string render_structural_report(const StructuralReport& report);

}  // namespace sboxkit
