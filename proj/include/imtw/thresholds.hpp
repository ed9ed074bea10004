#pragma once

#include <algorithm>

#include "imtw/bigint.hpp"
#include "imtw/kst.hpp"

namespace imtw {

/// M(s,t) = max(n_t, (12(s+1))^t): matching size that forces an induced
/// K_{t,t} or an induced matching of size s+1 in a bipartite graph.
inline BigInt threshold_M(const BigInt &s, unsigned t) {
  if (s < 0) throw InvalidArgument("threshold_M: s must be nonnegative");
  BigInt power = ipow(12 * (s + 1), t);
  return std::max(BigInt(kst_threshold(t)), power);
}

/// N(s,t,m) = max(n_t, (8 s m (m-1))^t): once m independent sets all have
/// this size, some independent set meets each of them in s vertices.
inline BigInt threshold_N(const BigInt &s, unsigned t, const BigInt &m) {
  if (s < 0 || m < 0) throw InvalidArgument("threshold_N: s and m must be nonnegative");
  BigInt power = ipow(8 * s * m * (m - 1), t);
  return std::max(BigInt(kst_threshold(t)), power);
}

struct Thresholds {
  unsigned mu = 0;
  unsigned t = 0;
  std::uint64_t n_t = 0;
  BigInt M;  ///< M(mu, t)
  BigInt C;  ///< N(M, t, M): light/heavy cut-off
  BigInt K;  ///< 2M + mu*C: strict upper bound on the resulting independence number
};

inline Thresholds threshold_K(unsigned mu, unsigned t) {
  if (t == 0) throw InvalidArgument("threshold_K: t must be at least 1");
  Thresholds th;
  th.mu = mu;
  th.t = t;
  th.n_t = kst_threshold(t);
  th.M = threshold_M(mu, t);
  th.C = threshold_N(th.M, t, th.M);
  th.K = 2 * th.M + BigInt(mu) * th.C;
  return th;
}

} // namespace imtw
