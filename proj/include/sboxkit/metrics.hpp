#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sboxkit/sbox.hpp"

// The six-criteria measurements: nonlinearity (fast Walsh-Hadamard), SAC,
// BIC in both flavors, DAP (difference distribution table) and LAP (linear
// approximation table), plus population statistics over freshly constructed
// S-Boxes. Bit i of a byte means the coefficient of 2^i throughout.

namespace sboxkit {

struct NlSummary {
  std::array<int, 8> per_component;
  int min;
  int max;
  double avg;
};

// NL(f) = 128 - max_w |WHT_f(w)| / 2 over each single-bit component.
NlSummary nonlinearity(const SBox& s);

struct SacReport {
  // matrix[i][j]: probability output bit j flips when input bit i flips
  std::array<std::array<double, 8>, 8> matrix;
  double min;
  double max;
  double avg;
};

SacReport sac(const SBox& s);

struct BicReport {
  double bic_sac;  // mean flip probability over all xor-pair components
  double bic_nl;   // mean nonlinearity over all 28 xor-pair components
};

BicReport bic(const SBox& s);

// max_{din != 0, dout} #{x : S(x) ^ S(x ^ din) = dout} / 256
double dap(const SBox& s);

// max_{a != 0, b != 0} |#{x : parity(x & a) = parity(S(x) & b)} - 128| / 256
double lap(const SBox& s);

// Table-5-row shape
struct MetricsReport {
  int nl_min;
  int nl_max;
  double nl_avg;
  double sac_min;
  double sac_max;
  double sac_avg;
  double bic_sac;
  double bic_nl;
  double dap;
  double lap;
};

MetricsReport full_report(const SBox& s);

std::string render_report_text(const std::string& name,
                               const MetricsReport& r);
std::string render_report_json(const std::string& name,
                               const MetricsReport& r);

struct BatchStats {
  int count = 0;
  double nl_avg_mean = 0.0;
  double nl_avg_min = 0.0;
  double nl_avg_max = 0.0;
  double dap_mean = 0.0;
  std::vector<double> nl_avgs;            // per box, construction order
  std::map<double, int> nl_avg_histogram;  // nl_avg value -> box count
};

// Constructs `count` strong S-Boxes from seeds drawn off a deterministic
// mt19937_64 stream and summarizes their per-box average nonlinearity and
// DAP. Boxes are measured in parallel; results do not depend on thread
// count.
BatchStats batch_stats(int count, std::uint64_t seed);

}  // namespace sboxkit
