#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace imtw {

/// Seeded generator with platform-independent draws. The standard
/// distributions are implementation-defined, so sampling is done by hand.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound > 0; rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  /// k distinct elements of `from`, uniformly, in sampled order.
  template <typename T> std::vector<T> sample(std::vector<T> from, std::size_t k) {
    for (std::size_t i = 0; i < k && i < from.size(); ++i)
      std::swap(from[i], from[i + below(from.size() - i)]);
    from.resize(std::min(k, from.size()));
    return from;
  }

private:
  std::mt19937_64 engine_;
};

/// splitmix64 of (master, index): per-sample seeds for batch runs.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

} // namespace imtw
