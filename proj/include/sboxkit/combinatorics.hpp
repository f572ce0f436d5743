#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "sboxkit/chaos.hpp"  // input_error

// Exact big-integer counting of the permutation classes behind the three
// structural S-Box conditions:
//   D1(n): no fixed point (derangements)
//   D2(n): no fixed point, no reverse fixed point S(i) = n-1-i
//   D3(n): both of the above and a single full n-cycle
// plus a brute-force enumeration oracle for small n.

namespace sboxkit {

using BigCount = boost::multiprecision::cpp_int;

// D1 by the staggered recursion D1(n) = (n-1)(D1(n-1) + D1(n-2)).
BigCount count_d1(int n);

// D1 as the nearest integer to n!/e, evaluated exactly through the
// alternating series n! * sum_{k=0..n} (-1)^k / k!.
BigCount d1_closed_form(int n);

// D2 by its odd/even recursion with published bases D2(1..4) = 0,0,0,4.
BigCount count_d2(int n);

// D3 by its odd/even recursion with published bases D3(1..4) = 0,0,0,2.
BigCount count_d3(int n);

BigCount factorial(int n);

struct ConditionSet {
  bool no_fixed_point = false;
  bool no_reverse_fixed_point = false;
  bool full_cycle_only = false;

  bool any() const {
    return no_fixed_point || no_reverse_fixed_point || full_cycle_only;
  }
};

// Enumerates all n! permutations and counts those satisfying the enabled
// conditions. n is capped at 10 (10! = 3,628,800).
BigCount brute_force_count(int n, const ConditionSet& conds);

// 5-significant-digit scientific rendering of an exact count, half-up.
struct SciNotation {
  double mantissa;  // in [1, 10)
  long exponent;

  std::string str() const;  // e.g. "3.1557e+506"
};

SciNotation to_scientific(const BigCount& c);

// Exact quotient num/den rendered in scientific form with `digits`
// significant digits (used for the D3(256)/256! share report).
std::string ratio_scientific(const BigCount& num, const BigCount& den,
                             int digits = 5);

}  // namespace sboxkit
