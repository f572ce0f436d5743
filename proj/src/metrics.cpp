#include "sboxkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace sboxkit {

namespace {

// in-place 256-point Walsh-Hadamard butterfly
void wht256(std::array<int, 256>& a) {
  for (int h = 1; h < 256; h <<= 1) {
    for (int i = 0; i < 256; i += h << 1) {
      for (int j = i; j < i + h; ++j) {
        const int x = a[static_cast<std::size_t>(j)];
        const int y = a[static_cast<std::size_t>(j + h)];
        a[static_cast<std::size_t>(j)] = x + y;
        a[static_cast<std::size_t>(j + h)] = x - y;
      }
    }
  }
}

// sign vector (-1)^f for the boolean component f(x) = parity(S(x) & mask)
std::array<int, 256> sign_vector(const SBox& s, std::uint8_t mask) {
  std::array<int, 256> v{};
  for (int x = 0; x < 256; ++x) {
    const int bit = __builtin_parity(s[static_cast<std::uint8_t>(x)] & mask);
    v[static_cast<std::size_t>(x)] = 1 - 2 * bit;
  }
  return v;
}

int nl_of_mask(const SBox& s, std::uint8_t mask) {
  std::array<int, 256> v = sign_vector(s, mask);
  wht256(v);
  int peak = 0;
  for (int w : v) peak = std::max(peak, std::abs(w));
  return 128 - peak / 2;
}

double sac_of_mask(const SBox& s, std::uint8_t mask) {
  long total = 0;
  for (int i = 0; i < 8; ++i) {
    const std::uint8_t flip = static_cast<std::uint8_t>(1 << i);
    for (int x = 0; x < 256; ++x) {
      const std::uint8_t a = s[static_cast<std::uint8_t>(x)];
      const std::uint8_t b = s[static_cast<std::uint8_t>(x ^ flip)];
      total += __builtin_parity((a ^ b) & mask);
    }
  }
  return static_cast<double>(total) / (8.0 * 256.0);
}

}  // namespace

NlSummary nonlinearity(const SBox& s) {
  NlSummary out{};
  long sum = 0;
  for (int j = 0; j < 8; ++j) {
    out.per_component[static_cast<std::size_t>(j)] =
        nl_of_mask(s, static_cast<std::uint8_t>(1 << j));
    sum += out.per_component[static_cast<std::size_t>(j)];
  }
  out.min = *std::min_element(out.per_component.begin(), out.per_component.end());
  out.max = *std::max_element(out.per_component.begin(), out.per_component.end());
  out.avg = static_cast<double>(sum) / 8.0;
  return out;
}

SacReport sac(const SBox& s) {
  SacReport out{};
  double lo = 1.0, hi = 0.0, sum = 0.0;
  for (int i = 0; i < 8; ++i) {
    const std::uint8_t flip = static_cast<std::uint8_t>(1 << i);
    std::array<int, 8> counts{};
    for (int x = 0; x < 256; ++x) {
      const std::uint8_t d = s[static_cast<std::uint8_t>(x)] ^
                             s[static_cast<std::uint8_t>(x ^ flip)];
      for (int j = 0; j < 8; ++j) counts[static_cast<std::size_t>(j)] += (d >> j) & 1;
    }
    for (int j = 0; j < 8; ++j) {
      const double p = counts[static_cast<std::size_t>(j)] / 256.0;
      out.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p;
      lo = std::min(lo, p);
      hi = std::max(hi, p);
      sum += p;
    }
  }
  out.min = lo;
  out.max = hi;
  out.avg = sum / 64.0;
  return out;
}

BicReport bic(const SBox& s) {
  double nl_sum = 0.0;
  double sac_sum = 0.0;
#pragma omp parallel for collapse(2) schedule(dynamic) \
    reduction(+ : nl_sum, sac_sum)
  for (int j = 0; j < 8; ++j) {
    for (int k = 0; k < 8; ++k) {
      if (k <= j) continue;
      const std::uint8_t mask = static_cast<std::uint8_t>((1 << j) | (1 << k));
      nl_sum += nl_of_mask(s, mask);
      sac_sum += sac_of_mask(s, mask);
    }
  }
  return {sac_sum / 28.0, nl_sum / 28.0};
}

double dap(const SBox& s) {
  int best = 0;
#pragma omp parallel for schedule(static) reduction(max : best)
  for (int din = 1; din < 256; ++din) {
    std::array<int, 256> counts{};
    for (int x = 0; x < 256; ++x) {
      const std::uint8_t dout = s[static_cast<std::uint8_t>(x)] ^
                                s[static_cast<std::uint8_t>(x ^ din)];
      ++counts[dout];
    }
    for (int c : counts) best = std::max(best, c);
  }
  return static_cast<double>(best) / 256.0;
}

double lap(const SBox& s) {
  int peak = 0;
#pragma omp parallel for schedule(static) reduction(max : peak)
  for (int b = 1; b < 256; ++b) {
    std::array<int, 256> v = sign_vector(s, static_cast<std::uint8_t>(b));
    wht256(v);
    // |count(a,b) - 128| = |WHT(a)| / 2, maximized over input masks a != 0
    for (int a = 1; a < 256; ++a)
      peak = std::max(peak, std::abs(v[static_cast<std::size_t>(a)]));
  }
  return static_cast<double>(peak) / 512.0;
}

MetricsReport full_report(const SBox& s) {
  const NlSummary nl = nonlinearity(s);
  const SacReport sc = sac(s);
  const BicReport bc = bic(s);
  return {nl.min, nl.max, nl.avg, sc.min, sc.max,
          sc.avg, bc.bic_sac, bc.bic_nl, dap(s), lap(s)};
}

std::string render_report_text(const std::string& name,
                               const MetricsReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "%-14s nonlinearity %d/%d/%.2f  SAC %.4f/%.4f/%.4f  "
                "BIC-SAC %.4f  BIC-NL %.2f  DAP %.4f  LAP %.4f\n",
                name.c_str(), r.nl_min, r.nl_max, r.nl_avg, r.sac_min,
                r.sac_max, r.sac_avg, r.bic_sac, r.bic_nl, r.dap, r.lap);
  return buf;
}

std::string render_report_json(const std::string& name,
                               const MetricsReport& r) {
  char buf[640];
  std::snprintf(
      buf, sizeof(buf),
      "{\"name\": \"%s\", \"nl_min\": %d, \"nl_max\": %d, \"nl_avg\": %.6f, "
      "\"sac_min\": %.10f, \"sac_max\": %.10f, \"sac_avg\": %.10f, "
      "\"bic_sac\": %.10f, \"bic_nl\": %.6f, \"dap\": %.10f, \"lap\": %.10f}\n",
      name.c_str(), r.nl_min, r.nl_max, r.nl_avg, r.sac_min, r.sac_max,
      r.sac_avg, r.bic_sac, r.bic_nl, r.dap, r.lap);
  return buf;
}

BatchStats batch_stats(int count, std::uint64_t seed) {
  if (count < 1) throw input_error("batch size must be >= 1");

  // draw all seeds up front so the stream is independent of scheduling
  std::mt19937_64 rng(seed);
  auto unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1p-53;
  };
  struct SeedDraw {
    EcmParams params;
    State2D s0;
  };
  std::vector<SeedDraw> draws;
  draws.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    SeedDraw d;
    d.params.gamma = 1.0 + 17.0 * unit();
    d.params.k = 3 + static_cast<int>(rng() % 15);
    d.s0.x = unit();
    d.s0.y = unit();
    if (d.s0.is_origin()) d.s0.x = 0x1p-53;
    draws.push_back(d);
  }

  std::vector<double> nl_avgs(static_cast<std::size_t>(count));
  std::vector<double> daps(static_cast<std::size_t>(count));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      const auto& d = draws[static_cast<std::size_t>(i)];
      const auto [box, trace] = construct_sbox(d.params, d.s0);
      nl_avgs[static_cast<std::size_t>(i)] = nonlinearity(box).avg;
      daps[static_cast<std::size_t>(i)] = dap(box);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  BatchStats stats;
  stats.count = count;
  stats.nl_avgs = nl_avgs;
  stats.nl_avg_min = *std::min_element(nl_avgs.begin(), nl_avgs.end());
  stats.nl_avg_max = *std::max_element(nl_avgs.begin(), nl_avgs.end());
  double sum = 0.0, dap_sum = 0.0;
  for (int i = 0; i < count; ++i) {
    sum += nl_avgs[static_cast<std::size_t>(i)];
    dap_sum += daps[static_cast<std::size_t>(i)];
    ++stats.nl_avg_histogram[nl_avgs[static_cast<std::size_t>(i)]];
  }
  stats.nl_avg_mean = sum / count;
  stats.dap_mean = dap_sum / count;
  return stats;
}

}  // namespace sboxkit
