#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace gctsp {

/// Seeded deterministic random source. One stream per trial; identical seeds
/// reproduce identical run trajectories. The draw primitives avoid
/// distribution classes from <random> so results do not depend on the
/// standard library implementation.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return (engine_() >> 11) * 0x1.0p-53; }

  /// Unbiased uniform integer in [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  int uniform_index(std::size_t bound) {
    return static_cast<int>(uniform_below(static_cast<std::uint64_t>(bound)));
  }

  /// Uniform random permutation of [0, n) by Fisher-Yates.
  std::vector<int> permutation(int n) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) {
      const int j = uniform_index(static_cast<std::size_t>(i) + 1);
      order[i] = order[j];
      order[j] = i;
    }
    return order;
  }

 private:
  std::mt19937_64 engine_;
};

/// Exact Poisson(1) sample by inverse transform: multiply uniform draws until
/// the product falls below 1/e; the sample is the number of draws minus one.
/// No artificial cap on the result.
int sample_poisson1(RandomStream& rng);

}  // namespace gctsp
