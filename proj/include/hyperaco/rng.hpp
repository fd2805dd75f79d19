#pragma once

#include <cstdint>

namespace hyperaco {

/// SplitMix64 generator. Chosen because solver runs must be reproducible
/// bit-for-bit from a 64-bit seed and experiment trials need independent
/// streams derived from one master seed by counter-based splitting.
/// All operations are integer arithmetic plus one exact double multiply,
/// so sequences are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Stream `index` of `master`: hashes (master, index) into a fresh state.
  /// Distinct indices give statistically independent, non-overlapping streams.
  static Rng stream(std::uint64_t master, std::uint64_t index) {
    std::uint64_t a = mix(master ^ mix(index + 0x9e3779b97f4a7c15ull));
    std::uint64_t b = mix(a + index);
    return Rng(b);
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  /// Uniform double in [0, 1): 53 random bits scaled by 2^-53.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t x, r;
    do {
      x = next_u64();
      r = x % bound;
    } while (x - r > 0ull - bound);
    return r;
  }

  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace hyperaco
