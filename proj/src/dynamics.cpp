#include "sboxkit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace sboxkit {

void TimeSeries::validate() const {
  if (values.size() < 2) throw input_error("time series needs length >= 2");
  for (double v : values)
    if (!std::isfinite(v)) throw input_error("time series contains non-finite values");
}

void SeConfig::validate() const {
  if (m < 1) throw input_error("embedding dimension m must be >= 1");
  if (!(r_factor > 0.0)) throw input_error("r_factor must be > 0");
}

std::pair<double, double> lyapunov_spectrum(const EcmParams& params,
                                            State2D s0, long n,
                                            long transient) {
  params.validate();
  s0.validate();
  if (n < 1) throw input_error("lyapunov_spectrum needs n >= 1");
  if (s0.is_origin())
    throw estimation_error("orbit trapped at the all-zero state");

  const double cx = params.coeff_x();
  const double cy = params.coeff_y();
  State2D s = s0;
  for (long i = 0; i < transient; ++i) {
    s = ecm_step(params, s);
    if (s.is_origin())
      throw estimation_error("orbit trapped at the all-zero state");
  }

  // tangent vectors, re-orthonormalized every step (norms grow by ~2^k*gamma)
  double v1x = 1.0, v1y = 0.0, v2x = 0.0, v2y = 1.0;
  double sum1 = 0.0, sum2 = 0.0;
  for (long i = 0; i < n; ++i) {
    const State2D sn = ecm_step(params, s);
    const double j11 = cx;
    const double j12 = cx * 2.0 * s.y;
    const double j21 = -2.0 * cy * sn.x * cx;
    const double j22 = cy * (1.0 - 4.0 * cx * sn.x * s.y);

    double w1x = j11 * v1x + j12 * v1y;
    double w1y = j21 * v1x + j22 * v1y;
    double w2x = j11 * v2x + j12 * v2y;
    double w2y = j21 * v2x + j22 * v2y;

    const double n1 = std::hypot(w1x, w1y);
    if (n1 == 0.0) throw estimation_error("tangent vector collapsed to zero");
    w1x /= n1;
    w1y /= n1;
    const double proj = w2x * w1x + w2y * w1y;
    w2x -= proj * w1x;
    w2y -= proj * w1y;
    const double n2 = std::hypot(w2x, w2y);
    if (n2 == 0.0) throw estimation_error("tangent vectors became collinear");
    w2x /= n2;
    w2y /= n2;

    sum1 += std::log(n1);
    sum2 += std::log(n2);
    v1x = w1x; v1y = w1y; v2x = w2x; v2y = w2y;
    s = sn;
  }
  double l1 = sum1 / static_cast<double>(n);
  double l2 = sum2 / static_cast<double>(n);
  if (l1 < l2) std::swap(l1, l2);
  return {l1, l2};
}

double lyapunov_seed_map(const SeedMapParams& params, double x0, long n,
                         long transient) {
  params.validate();
  if (n < 1) throw input_error("lyapunov_seed_map needs n >= 1");
  double x = x0;
  for (long i = 0; i < transient; ++i) x = seed_map_step(params, x);
  double sum = 0.0;
  long used = 0;
  for (long i = 0; i < n; ++i) {
    x = seed_map_step(params, x);
    const double deriv = params.kind == SeedMapKind::Logistic
                             ? params.value * (1.0 - 2.0 * x)
                             : -2.0 * x;
    if (deriv == 0.0) continue;  // measure-zero critical point
    sum += std::log(std::abs(deriv));
    ++used;
  }
  if (used == 0) throw estimation_error("orbit pinned at the critical point");
  return sum / static_cast<double>(used);
}

namespace {

double series_std(const std::vector<double>& v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) /
                      static_cast<double>(v.size());
  double acc = 0.0;
  for (double x : v) acc += (x - mean) * (x - mean);
  return std::sqrt(acc / static_cast<double>(v.size()));
}

// pairs (i<j) of m-length templates within Chebyshev distance r, counted
// over template start indices [0, count)
long long count_template_pairs(const double* v, long count, int m, double r) {
  long long total = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total)
  for (long i = 0; i < count - 1; ++i) {
    long long local = 0;
    for (long j = i + 1; j < count; ++j) {
      bool within = true;
      for (int d = 0; d < m; ++d) {
        if (std::abs(v[i + d] - v[j + d]) >= r) {
          within = false;
          break;
        }
      }
      local += within;
    }
    total += local;
  }
  return total;
}

double tolerance_radius(const TimeSeries& series, const SeConfig& cfg) {
  double r = cfg.r_factor * series_std(series.values);
  if (r == 0.0) r = 1e-12;  // constant series: every template matches
  return r;
}

}  // namespace

double sample_entropy(const TimeSeries& series, const SeConfig& cfg) {
  series.validate();
  cfg.validate();
  const long n = static_cast<long>(series.values.size());
  const int m = cfg.m;
  if (n <= m + 1) throw input_error("series too short for embedding m+1");

  const double r = tolerance_radius(series, cfg);
  const long count = n - m;  // common template range for both lengths
  const double* v = series.values.data();
  const long long b = count_template_pairs(v, count, m, r);
  const long long a = count_template_pairs(v, count, m + 1, r);
  if (b == 0 || a == 0)
    throw estimation_error("sample entropy undefined: no template matches");
  return -std::log(static_cast<double>(a) / static_cast<double>(b));
}

double k2_entropy(const TimeSeries& series, const SeConfig& cfg) {
  series.validate();
  cfg.validate();
  const long n = static_cast<long>(series.values.size());
  const int m = cfg.m;
  if (n <= m + 1) throw input_error("series too short for embedding m+1");

  const double r = tolerance_radius(series, cfg);
  const double* v = series.values.data();
  const long tm = n - m + 1;
  const long tm1 = n - m;
  const long long cm = count_template_pairs(v, tm, m, r);
  const long long cm1 = count_template_pairs(v, tm1, m + 1, r);
  if (cm == 0 || cm1 == 0)
    throw estimation_error("K2 entropy undefined: empty correlation sums");
  const double dm = static_cast<double>(cm) /
                    (0.5 * static_cast<double>(tm) * static_cast<double>(tm - 1));
  const double dm1 = static_cast<double>(cm1) /
                     (0.5 * static_cast<double>(tm1) * static_cast<double>(tm1 - 1));
  return std::log(dm / dm1);
}

namespace {

double dist2(const State2D& a, const State2D& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace

double correlation_dimension(const std::vector<State2D>& points,
                             const std::vector<double>& radii) {
  if (points.size() < 2) throw input_error("need at least 2 points");
  if (radii.size() < 2) throw input_error("need at least 2 radii");
  std::vector<double> r_sorted(radii);
  std::sort(r_sorted.begin(), r_sorted.end());
  for (double r : r_sorted)
    if (!(r > 0.0)) throw input_error("radii must be positive");

  const long n = static_cast<long>(points.size());
  const std::size_t nr = r_sorted.size();
  std::vector<double> r2(nr);
  for (std::size_t i = 0; i < nr; ++i) r2[i] = r_sorted[i] * r_sorted[i];

  // histogram pair distances into the radius buckets; C(r_k) is then a
  // suffix... prefix sum over buckets
  std::vector<long long> counts(nr, 0);
#pragma omp parallel
  {
    std::vector<long long> local(nr, 0);
#pragma omp for schedule(dynamic, 64) nowait
    for (long i = 0; i < n - 1; ++i) {
      for (long j = i + 1; j < n; ++j) {
        const double d2 = dist2(points[i], points[j]);
        auto it = std::upper_bound(r2.begin(), r2.end(), d2);
        // d2 < r2[k] for all k >= it-index: record the first bucket it falls in
        const std::size_t idx = static_cast<std::size_t>(it - r2.begin());
        if (idx < nr) ++local[idx];
      }
    }
#pragma omp critical
    for (std::size_t k = 0; k < nr; ++k) counts[k] += local[k];
  }
  // cumulative: pairs with distance < r_k
  std::vector<long long> cum(nr, 0);
  long long acc = 0;
  for (std::size_t k = 0; k < nr; ++k) {
    acc += counts[k];
    cum[k] = acc;
  }

  const double total_pairs = 0.5 * static_cast<double>(n) *
                             static_cast<double>(n - 1);
  std::vector<double> lx, ly;
  for (std::size_t k = 0; k < nr; ++k) {
    if (cum[k] > 0) {
      lx.push_back(std::log(r_sorted[k]));
      ly.push_back(std::log(static_cast<double>(cum[k]) / total_pairs));
    }
  }
  if (lx.size() < 2)
    throw estimation_error("correlation sums empty at all radii");

  // least-squares slope
  const double n_fit = static_cast<double>(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n_fit;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n_fit;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  if (sxx == 0.0) throw estimation_error("degenerate radii window");
  return sxy / sxx;
}

std::vector<double> default_cd_radii(const std::vector<State2D>& points,
                                     int count) {
  if (points.size() < 10) throw input_error("need at least 10 points");
  if (count < 2) throw input_error("need at least 2 radii");

  // deterministic stride subsample, at most 2000 points
  const std::size_t cap = 2000;
  const std::size_t stride = std::max<std::size_t>(1, points.size() / cap);
  std::vector<State2D> sub;
  for (std::size_t i = 0; i < points.size(); i += stride) sub.push_back(points[i]);

  std::vector<double> d;
  d.reserve(sub.size() * (sub.size() - 1) / 2);
  for (std::size_t i = 0; i + 1 < sub.size(); ++i)
    for (std::size_t j = i + 1; j < sub.size(); ++j)
      d.push_back(std::sqrt(dist2(sub[i], sub[j])));
  std::sort(d.begin(), d.end());

  auto percentile = [&](double p) {
    std::size_t idx = static_cast<std::size_t>(p / 100.0 *
                                               static_cast<double>(d.size() - 1));
    return d[idx];
  };
  double lo = percentile(1.0);
  double hi = percentile(10.0);
  if (!(lo > 0.0)) {
    // duplicate-heavy sets: start above zero
    for (double v : d)
      if (v > 0.0) { lo = v; break; }
  }
  if (!(lo > 0.0) || !(hi > lo))
    throw estimation_error("degenerate point set: no usable radius window");

  std::vector<double> radii(static_cast<std::size_t>(count));
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < count; ++i)
    radii[static_cast<std::size_t>(i)] =
        std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                           static_cast<double>(count - 1));
  return radii;
}

std::vector<BifurcationRow> bifurcation_scan(ScanMap map, double lo, double hi,
                                             int steps, int samples_per_param,
                                             int transient, int ecm_k) {
  if (steps < 2) throw input_error("bifurcation scan needs steps >= 2");
  if (samples_per_param < 1) throw input_error("samples_per_param must be >= 1");
  if (!(hi >= lo)) throw input_error("parameter range is empty");

  std::vector<BifurcationRow> rows(
      static_cast<std::size_t>(steps) * static_cast<std::size_t>(samples_per_param));

#pragma omp parallel for schedule(dynamic)
  for (int si = 0; si < steps; ++si) {
    const double p = lo + (hi - lo) * static_cast<double>(si) /
                              static_cast<double>(steps - 1);
    BifurcationRow* out =
        rows.data() + static_cast<std::size_t>(si) *
                          static_cast<std::size_t>(samples_per_param);
    if (map == ScanMap::Ecm) {
      const double g = p > 0.0 ? p : 1e-12;
      EcmParams params{g, ecm_k};
      State2D s{0.4142135623730951, 0.7320508075688772};
      for (int i = 0; i < transient; ++i) s = ecm_step(params, s);
      for (int i = 0; i < samples_per_param; ++i) {
        s = ecm_step(params, s);
        out[i] = {g, s.x};
      }
    } else {
      SeedMapParams params{map == ScanMap::Logistic ? SeedMapKind::Logistic
                                                    : SeedMapKind::Quadratic,
                           p};
      double x = map == ScanMap::Logistic ? 0.123456789 : 0.3;
      for (int i = 0; i < transient; ++i) x = seed_map_step(params, x);
      for (int i = 0; i < samples_per_param; ++i) {
        x = seed_map_step(params, x);
        out[i] = {p, x};
      }
    }
  }
  return rows;
}

EcmByteStream::EcmByteStream(const EcmParams& params, State2D s0,
                             Channel channel)
    : params_(params), state_(s0), channel_(channel) {
  params_.validate();
  state_.validate();
}

std::uint8_t EcmByteStream::next() {
  state_ = ecm_step(params_, state_);
  const double v = channel_ == Channel::X ? state_.x : state_.y;
  const double scaled = std::floor(v * 1e16);
  return static_cast<std::uint8_t>(static_cast<std::uint64_t>(scaled) & 0xFF);
}

void EcmByteStream::fill(std::uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = next();
}

std::vector<std::uint8_t> extract_bitstream(const EcmParams& params,
                                            State2D s0, std::size_t n_bytes,
                                            Channel channel) {
  if (n_bytes < 1) throw input_error("n_bytes must be >= 1");
  EcmByteStream stream(params, s0, channel);
  std::vector<std::uint8_t> out(n_bytes);
  stream.fill(out.data(), out.size());
  return out;
}

std::string to_csv(const std::vector<BifurcationRow>& rows,
                   const std::string& param_name) {
  std::string out = param_name + ",state\n";
  char buf[80];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", r.param, r.state);
    out += buf;
  }
  return out;
}

}  // namespace sboxkit
