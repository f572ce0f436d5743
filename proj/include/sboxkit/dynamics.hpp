#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sboxkit/chaos.hpp"

// Quantitative behavior of the maps: Lyapunov spectra, sample entropy,
// correlation (K2) entropy, correlation dimension, bifurcation scans and
// raw byte-stream export for external randomness batteries. The O(n^2)
// pair-counting kernels are OpenMP-parallel with exact integer reductions,
// so results do not depend on thread count or iteration order.

namespace sboxkit {

// Thrown when an estimator's statistic is undefined for the given data
// (zero template matches, empty correlation sums, trapped orbit).
class estimation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TimeSeries {
  std::vector<double> values;
  std::string source_tag;

  void validate() const;  // finite values, length >= 2
};

struct SeConfig {
  int m = 2;              // embedding dimension
  double r_factor = 0.2;  // tolerance = r_factor * std(series)

  void validate() const;
};

struct DynamicsReport {
  std::optional<std::pair<double, double>> lyapunov;  // sorted descending
  std::optional<double> sample_entropy;
  std::optional<double> correlation_dimension;
  std::optional<double> k2_entropy;
};

// Both ECM exponents from analytic Jacobian products with Gram-Schmidt
// re-orthonormalization every step, sorted descending.
std::pair<double, double> lyapunov_spectrum(const EcmParams& params,
                                            State2D s0, long n,
                                            long transient = 300);

// Lyapunov exponent of a 1D seed map by derivative-log averaging.
double lyapunov_seed_map(const SeedMapParams& params, double x0, long n,
                         long transient = 1000);

// SE(m, r, n) = -log(A/B): A and B count template pairs within Chebyshev
// distance r at embedding dimensions m+1 and m, over a common template
// range, self-matches excluded.
double sample_entropy(const TimeSeries& series, const SeConfig& cfg = {});

// Correlation (K2) entropy: log of the ratio of correlation sums at
// embedding dimensions m and m+1, each over its full template set.
double k2_entropy(const TimeSeries& series, const SeConfig& cfg = {});

// Grassberger-Procaccia slope of log C(r) against log r over the given
// radii; radii with empty correlation sums are dropped from the fit.
double correlation_dimension(const std::vector<State2D>& points,
                             const std::vector<double>& radii);

// Default fit window: logarithmically spaced radii between the 1st and
// 10th percentile of pairwise distances on a deterministic subsample.
std::vector<double> default_cd_radii(const std::vector<State2D>& points,
                                     int count = 20);

enum class ScanMap { Logistic, Quadratic, Ecm };

struct BifurcationRow {
  double param;
  double state;
};

// For each of `steps` parameter values across [lo,hi]: drop a transient,
// then emit samples_per_param successive states as (param, state) rows.
// The ECM variant scans gamma at fixed k and records the x channel.
std::vector<BifurcationRow> bifurcation_scan(ScanMap map, double lo, double hi,
                                             int steps, int samples_per_param,
                                             int transient = 300,
                                             int ecm_k = 7);

enum class Channel { X, Y };

// Incremental byte source: one byte per ECM iterate via
// floor(v * 10^16) mod 256 on the selected channel.
class EcmByteStream {
 public:
  EcmByteStream(const EcmParams& params, State2D s0, Channel channel);

  std::uint8_t next();
  void fill(std::uint8_t* out, std::size_t n);
  State2D state() const { return state_; }

 private:
  EcmParams params_;
  State2D state_;
  Channel channel_;
};

std::vector<std::uint8_t> extract_bitstream(const EcmParams& params,
                                            State2D s0, std::size_t n_bytes,
                                            Channel channel);

// CSV helpers shared by the scan subcommands: header row, '.' decimal
// separator, LF line endings, no locale.
std::string to_csv(const std::vector<BifurcationRow>& rows,
                   const std::string& param_name);

}  // namespace sboxkit
