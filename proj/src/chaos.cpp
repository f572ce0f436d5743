#include "sboxkit/chaos.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

namespace sboxkit {

void SeedMapParams::validate() const {
  if (kind == SeedMapKind::Logistic) {
    if (!(value >= 0.0 && value <= 4.0))
      throw input_error("logistic control parameter mu must lie in [0,4]");
  } else {
    if (!(value >= 0.0 && value <= 2.0))
      throw input_error("quadratic control parameter gamma must lie in [0,2]");
  }
}

double SeedMapParams::state_lo() const {
  return kind == SeedMapKind::Logistic ? 0.0 : -2.0;
}

double SeedMapParams::state_hi() const {
  return kind == SeedMapKind::Logistic ? 1.0 : 2.0;
}

double seed_map_step(const SeedMapParams& params, double x) {
  params.validate();
  if (!std::isfinite(x) || x < params.state_lo() || x > params.state_hi())
    throw input_error("seed map state outside the map's domain");
  const double next = params.kind == SeedMapKind::Logistic
                          ? params.value * (x - x * x)
                          : params.value - x * x;
  return std::min(params.state_hi(), std::max(params.state_lo(), next));
}

void EcmParams::validate() const {
  if (!(gamma > 0.0 && gamma <= 18.0))
    throw input_error("ECM gamma must lie in (0,18]");
  if (k < 3 || k > 17) throw input_error("ECM exponent k must lie in [3,17]");
}

double EcmParams::coeff_x() const {
  return static_cast<double>(1ULL << k) * gamma;
}

double EcmParams::coeff_y() const {
  long long p = 1;
  for (int i = 0; i < k; ++i) p *= 3;  // 3^17 < 2^53, exact
  return static_cast<double>(p) * gamma;
}

void State2D::validate() const {
  if (!std::isfinite(x) || !std::isfinite(y) || x < 0.0 || x >= 1.0 ||
      y < 0.0 || y >= 1.0)
    throw input_error("ECM state coordinates must be finite and in [0,1)");
}

State2D ecm_step(const EcmParams& params, State2D s) {
  const double cx = params.coeff_x();
  const double cy = params.coeff_y();
  const double tx = cx * (s.x + s.y * s.y);
  const double x1 = mod1(tx);
  const double ty = cy * (s.y - x1 * x1);
  const double y1 = mod1(ty);
  return {x1, y1};
}

Orbit ecm_orbit(const EcmParams& params, State2D s0, long transient, long n) {
  params.validate();
  s0.validate();
  if (transient < 0) throw input_error("transient must be >= 0");
  if (n < 1) throw input_error("orbit length must be >= 1");
  State2D s = s0;
  for (long i = 0; i < transient; ++i) s = ecm_step(params, s);
  Orbit orbit;
  orbit.transient_dropped = transient;
  orbit.samples.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    s = ecm_step(params, s);
    orbit.samples.push_back(s);
  }
  return orbit;
}

namespace {

// xor-fold a 64-bit word onto 53 bits so every input bit reaches a distinct
// mantissa bit of the resulting double in [0,1)
double fold53(std::uint64_t u) {
  const std::uint64_t m = (u >> 11) ^ (u & 0x7FFULL);
  return static_cast<double>(m) * 0x1p-53;
}

std::uint64_t load_be64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

std::pair<EcmParams, State2D> seed_from_key(const InitialKey& ik) {
  const std::uint64_t u1 = load_be64(ik.data());
  const std::uint64_t u2 = load_be64(ik.data() + 8);
  const std::uint64_t u3 = load_be64(ik.data() + 16);
  const std::uint64_t u4 = load_be64(ik.data() + 24);

  State2D s{fold53(u1), fold53(u2)};
  if (s.is_origin()) s.x = 0x1p-53;

  EcmParams params;
  params.gamma = 1.0 + 17.0 * fold53(u3);
  params.k = 3 + static_cast<int>(u4 % 15);
  params.validate();
  s.validate();
  return {params, s};
}

InitialKey parse_initial_key_hex(const std::string& hex) {
  std::string h = hex;
  if (h.size() >= 2 && h[0] == '0' && (h[1] == 'x' || h[1] == 'X'))
    h = h.substr(2);
  if (h.size() != 64)
    throw input_error("initial key must be 64 hex characters (256 bits)");
  InitialKey ik{};
  for (std::size_t i = 0; i < 32; ++i) {
    auto nib = [&](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      if (c >= 'A' && c <= 'F') return c - 'A' + 10;
      throw input_error(std::string("invalid hex character '") + c + "'");
    };
    ik[i] = static_cast<std::uint8_t>(nib(h[2 * i]) << 4 | nib(h[2 * i + 1]));
  }
  return ik;
}

std::string to_hex(const std::uint8_t* data, std::size_t len) {
  static const char* digits = "0123456789ABCDEF";
  std::string out;
  out.reserve(2 * len);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(digits[data[i] >> 4]);
    out.push_back(digits[data[i] & 0xF]);
  }
  return out;
}

}  // namespace sboxkit
