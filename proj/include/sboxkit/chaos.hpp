#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Chaotic maps: the two 1D seed maps (logistic, quadratic) and the 2D
// exponential coupled map (ECM) that drives S-Box construction and key
// expansion. All state arithmetic is plain IEEE double with a pinned
// evaluation order; the library is compiled with -ffp-contract=off so
// orbits are bit-reproducible across builds.

namespace sboxkit {

// Thrown when an input violates a documented precondition.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SeedMapKind { Logistic, Quadratic };

// One of the 1D seed maps together with its control parameter:
// logistic x' = mu*(x - x^2) with mu in [0,4], state in [0,1];
// quadratic x' = g - x^2 with g in [0,2], state in [-2,2].
struct SeedMapParams {
  SeedMapKind kind = SeedMapKind::Logistic;
  double value = 4.0;  // mu (logistic) or gamma (quadratic)

  void validate() const;
  double state_lo() const;
  double state_hi() const;
};

double seed_map_step(const SeedMapParams& params, double x);

// Control parameters of the 2D-ECM:
//   x' = 2^k * gamma * (x + y^2)  mod 1
//   y' = 3^k * gamma * (y - x'^2) mod 1
struct EcmParams {
  double gamma = 1.0;  // (0, 18]
  int k = 3;           // [3, 17]

  void validate() const;
  // 2^k*gamma and 3^k*gamma, each a single rounding from exact integer powers.
  double coeff_x() const;
  double coeff_y() const;
};

struct State2D {
  double x = 0.0;
  double y = 0.0;

  void validate() const;  // finite, in [0,1)
  bool is_origin() const { return x == 0.0 && y == 0.0; }
};

// mod-1 reduction into [0,1); negative arguments wrap upward. For tiny
// negative v the subtraction can round to exactly 1.0, which wraps to 0.
inline double mod1(double v) {
  double f = v - std::floor(v);
  return f < 1.0 ? f : 0.0;
}

// One step of the 2D-ECM. x' is computed first and feeds the y update.
State2D ecm_step(const EcmParams& params, State2D s);

struct Orbit {
  std::vector<State2D> samples;
  long transient_dropped = 0;
};

// Applies ecm_step `transient` times discarding the results, then records
// the next `n` iterates in order. Pure in (params, s0, transient, n).
Orbit ecm_orbit(const EcmParams& params, State2D s0, long transient, long n);

using InitialKey = std::array<std::uint8_t, 32>;

// Deterministic derivation of ECM parameters and a start state from a
// 256-bit key. The four 8-byte big-endian words u1..u4 map to
//   x0    = fold53(u1) / 2^53
//   y0    = fold53(u2) / 2^53
//   gamma = 1 + 17 * fold53(u3) / 2^53
//   k     = 3 + (u4 mod 15)
// where fold53(u) = (u >> 11) xor (u & 0x7FF) so every key bit lands on a
// distinct mantissa bit and single-bit flips always change the output.
// The all-zero corner case gets x0 = 2^-53.
std::pair<EcmParams, State2D> seed_from_key(const InitialKey& ik);

InitialKey parse_initial_key_hex(const std::string& hex);
std::string to_hex(const std::uint8_t* data, std::size_t len);

}  // namespace sboxkit
