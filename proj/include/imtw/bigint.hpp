#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace imtw {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(BigInt base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

/// floor(x^(1/k)) for x >= 0, k >= 1.
inline BigInt iroot_floor(const BigInt &x, unsigned k) {
  if (x < 0) throw std::domain_error("iroot_floor of a negative number");
  if (x < 2 || k == 1) return x;
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) / k + 1;
  BigInt lo = 0, hi = BigInt(1) << bits;  // hi^k > x
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) >> 1;
    if (ipow(mid, k) <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

inline bool is_perfect_power(const BigInt &x, unsigned k) {
  BigInt r = iroot_floor(x, k);
  return ipow(r, k) == x;
}

} // namespace imtw
