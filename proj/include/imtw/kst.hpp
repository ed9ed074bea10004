#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "imtw/bigint.hpp"
#include "imtw/error.hpp"

namespace imtw {

/// Kővári–Sós–Turán edge bound (t-1)^(1/t)/2 * n^(2-1/t) + t*n/2.
///
/// The value is exact when both radicals are integers (t <= 2 with n a
/// perfect square, or t = 1); otherwise it is nudged two ulps upward so it
/// never understates the bound. Use kst_admits() for exact comparisons.
inline double kst_edge_bound(std::uint64_t n, unsigned t) {
  if (t == 0) throw InvalidArgument("kst_edge_bound: t must be at least 1");
  if (n == 0) return 0.0;
  const long double linear = static_cast<long double>(t) * n / 2.0L;
  if (t == 1) return static_cast<double>(linear);
  bool coef_exact = is_perfect_power(BigInt(t - 1), t);
  bool power_exact = is_perfect_power(ipow(BigInt(n), t - 1), t);
  long double coef = std::pow(static_cast<long double>(t - 1), 1.0L / t);
  long double power = n * std::pow(static_cast<long double>(n), static_cast<long double>(t - 1) / t);
  if (coef_exact) coef = static_cast<long double>(iroot_floor(BigInt(t - 1), t));
  if (power_exact) power = n * static_cast<long double>(iroot_floor(ipow(BigInt(n), t - 1), t));
  double value = static_cast<double>(coef / 2.0L * power + linear);
  if (coef_exact && power_exact) return value;
  const double inf = std::numeric_limits<double>::infinity();
  return std::nextafter(std::nextafter(value, inf), inf);
}

/// Exactly decides m <= kst_edge_bound(n, t):
///   2m - t*n <= (t-1)^(1/t) * n^(2-1/t)  <=>  (2m - t*n)^t <= (t-1) * n^(2t-1)
/// when the left side is positive.
inline bool kst_admits(std::uint64_t n, unsigned t, std::uint64_t m) {
  if (t == 0) throw InvalidArgument("kst_admits: t must be at least 1");
  BigInt lhs = BigInt(2) * m - BigInt(t) * n;
  if (lhs <= 0) return true;
  return ipow(lhs, t) <= BigInt(t - 1) * ipow(BigInt(n), 2 * t - 1);
}

namespace detail {

// Sign of 2u - w - t where u = (n^(t-1))^(1/t), w = ((t-1) n^(t-1))^(1/t).
// The corollary inequality t*n/2 <= (1 - (t-1)^(1/t)/2) n^(2-1/t) divided by
// n/2 is exactly 2u - w >= t. Decided by integer root enclosures of growing
// precision, or exactly when both radicals are integers.
inline bool kst_simplified_bound_holds(std::uint64_t n, unsigned t) {
  const BigInt base = ipow(BigInt(n), t - 1);
  const BigInt wbase = BigInt(t - 1) * base;
  if (is_perfect_power(base, t) && is_perfect_power(wbase, t))
    return 2 * iroot_floor(base, t) - iroot_floor(wbase, t) >= t;
  for (unsigned bits = 32; bits <= 8192; bits *= 2) {
    const BigInt scale = BigInt(1) << (bits * t);
    BigInt u_lo = iroot_floor(base * scale, t), w_lo = iroot_floor(wbase * scale, t);
    BigInt u_hi = u_lo + 1, w_hi = w_lo + 1;
    BigInt target = BigInt(t) << bits;
    if (2 * u_lo - w_hi >= target) return true;
    if (2 * u_hi - w_lo < target) return false;
  }
  throw Error("kst_threshold: could not separate the inequality at n=" + std::to_string(n) +
              ", t=" + std::to_string(t));
}

} // namespace detail

/// Smallest n >= 1 from which every K_{t,t}-subgraph-free n-vertex graph has
/// at most n^(2-1/t) edges by the KST bound.
inline std::uint64_t kst_threshold(unsigned t) {
  if (t == 0) throw InvalidArgument("kst_threshold: t must be at least 1");
  if (detail::kst_simplified_bound_holds(1, t)) return 1;
  std::uint64_t lo = 1, hi = 2;  // fails at lo, probe hi
  while (!detail::kst_simplified_bound_holds(hi, t)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (detail::kst_simplified_bound_holds(mid, t))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

} // namespace imtw
