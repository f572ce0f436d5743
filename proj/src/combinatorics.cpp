#include "sboxkit/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>
#include <vector>

namespace sboxkit {

namespace {

void require_positive(int n) {
  if (n < 1) throw input_error("n must be >= 1");
}

}  // namespace

BigCount count_d1(int n) {
  require_positive(n);
  if (n == 1) return 0;
  BigCount prev = 0, cur = 1;  // D1(1), D1(2)
  for (int m = 3; m <= n; ++m) {
    BigCount next = BigCount(m - 1) * (cur + prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigCount d1_closed_form(int n) {
  require_positive(n);
  // sum_{k=0..n} (-1)^k * n!/k!, accumulated from k = n downward where the
  // term is 1; the alternating tail keeps |n!/e - sum| < 1/(n+1)
  BigCount term = 1, total = 0;
  int sign = (n % 2 == 0) ? 1 : -1;
  for (int k = n; k >= 0; --k) {
    total += sign * term;
    term *= k;  // n!/(k-1)! = (n!/k!) * k
    sign = -sign;
  }
  return total;
}

BigCount count_d2(int n) {
  require_positive(n);
  static const std::array<int, 4> base{0, 0, 0, 4};  // D2(1..4)
  if (n <= 4) return base[static_cast<std::size_t>(n - 1)];
  std::vector<BigCount> d(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= 4; ++i) d[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(i - 1)];
  for (int m = 5; m <= n; ++m) {
    if (m % 2 == 1)
      d[static_cast<std::size_t>(m)] = BigCount(m - 1) * (d[static_cast<std::size_t>(m - 1)] + 2 * d[static_cast<std::size_t>(m - 2)]);
    else
      d[static_cast<std::size_t>(m)] =
          BigCount(m - 2) * (d[static_cast<std::size_t>(m - 1)] + d[static_cast<std::size_t>(m - 2)] +
                             2 * d[static_cast<std::size_t>(m - 3)] + 2 * d[static_cast<std::size_t>(m - 4)]);
  }
  return d[static_cast<std::size_t>(n)];
}

BigCount count_d3(int n) {
  require_positive(n);
  static const std::array<int, 4> base{0, 0, 0, 2};  // D3(1..4)
  if (n <= 4) return base[static_cast<std::size_t>(n - 1)];
  BigCount d1 = 0, d2 = 0, d3 = 0, d4 = 2;  // D3(m-4..m-1) rolling window
  BigCount cur;
  for (int m = 5; m <= n; ++m) {
    if (m % 2 == 1)
      cur = BigCount(m - 1) * (d4 + d3);
    else
      cur = BigCount(m - 2) * (d4 + d2);
    d1 = std::move(d2);
    d2 = std::move(d3);
    d3 = std::move(d4);
    d4 = std::move(cur);
  }
  return d4;
}

BigCount factorial(int n) {
  if (n < 0) throw input_error("n must be >= 0");
  BigCount f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace {

bool satisfies(const std::vector<int>& perm, const ConditionSet& conds) {
  const int n = static_cast<int>(perm.size());
  if (conds.no_fixed_point || conds.no_reverse_fixed_point) {
    for (int i = 0; i < n; ++i) {
      if (conds.no_fixed_point && perm[static_cast<std::size_t>(i)] == i) return false;
      if (conds.no_reverse_fixed_point && perm[static_cast<std::size_t>(i)] == n - 1 - i)
        return false;
    }
  }
  if (conds.full_cycle_only) {
    int len = 1;
    int x = perm[0];
    while (x != 0) {
      x = perm[static_cast<std::size_t>(x)];
      ++len;
    }
    if (len != n) return false;
  }
  return true;
}

}  // namespace

BigCount brute_force_count(int n, const ConditionSet& conds) {
  require_positive(n);
  if (n > 10) throw input_error("brute-force enumeration is capped at n = 10");
  if (!conds.any()) throw input_error("enable at least one condition");

  // partition the n! permutations by first element; each slice enumerates
  // the (n-1)! arrangements of the remainder
  long long total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (int first = 0; first < n; ++first) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    perm[0] = first;
    std::size_t pos = 1;
    for (int v = 0; v < n; ++v)
      if (v != first) perm[pos++] = v;
    std::sort(perm.begin() + 1, perm.end());
    long long local = 0;
    do {
      local += satisfies(perm, conds);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    total += local;
  }
  return total;
}

std::string SciNotation::str() const {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4fe%+ld", mantissa, exponent);
  return buf;
}

SciNotation to_scientific(const BigCount& c) {
  if (c < 1) throw input_error("to_scientific requires a positive count");
  const std::string s = c.str();
  const long exponent = static_cast<long>(s.size()) - 1;

  // first six digits, zero-padded, then round half-up to five
  long long six = 0;
  for (int i = 0; i < 6; ++i) {
    const char d = i < static_cast<int>(s.size()) ? s[static_cast<std::size_t>(i)] : '0';
    six = six * 10 + (d - '0');
  }
  long long five = (six + 5) / 10;
  long exp = exponent;
  if (five == 100000) {
    five = 10000;
    ++exp;
  }
  return {static_cast<double>(five) / 1e4, exp};
}

std::string ratio_scientific(const BigCount& num, const BigCount& den,
                             int digits) {
  if (num < 0 || den <= 0) throw input_error("ratio needs num >= 0, den > 0");
  if (digits < 1 || digits > 18) throw input_error("digits out of range");
  if (num == 0) return "0";

  // scale so the quotient carries enough decimal digits, then place the point
  BigCount scaled = num;
  long shift = 0;
  while (scaled < den) {
    scaled *= 10;
    ++shift;
  }
  for (int i = 0; i < digits; ++i) scaled *= 10;
  BigCount q = scaled / den;
  std::string qs = q.str();
  // q has digits+1 .. digits+? leading digits; exponent of num/den
  const long exponent = static_cast<long>(qs.size()) - 1 - digits - shift;

  long long lead = 0;
  for (int i = 0; i <= digits; ++i) {
    const char d = i < static_cast<int>(qs.size()) ? qs[static_cast<std::size_t>(i)] : '0';
    lead = lead * 10 + (d - '0');
  }
  long long mant = (lead + 5) / 10;
  long exp = exponent;
  long long cap = 1;
  for (int i = 0; i < digits; ++i) cap *= 10;
  if (mant >= cap) {
    mant /= 10;
    ++exp;
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.*fe%+ld", digits - 1,
                static_cast<double>(mant) / static_cast<double>(cap / 10), exp);
  return buf;
}

}  // namespace sboxkit
