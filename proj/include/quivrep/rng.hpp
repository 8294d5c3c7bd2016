#pragma once

#include <cstdint>

namespace quivrep {

/// Deterministic splitmix64 stream. Used for every seeded probe and sample in
/// the library so results are reproducible across platforms; std::mt19937 and
/// the distributions of <random> are deliberately avoided.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], inclusive.
  long long next_int(long long lo, long long hi) {
    if (hi < lo) return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next_u64() % span);
  }

  /// Derived stream, independent of subsequent draws from this one.
  std::uint64_t fork() { return next_u64() ^ 0xa0761d6478bd642full; }

 private:
  std::uint64_t state_;
};

}  // namespace quivrep
