#pragma once

#include <cstdint>

namespace rns {

inline constexpr const char* kRngAlgorithm = "splitmix64-per-index";

/// splitmix64 (Steele, Lea, Flood 2014). Each logical draw site gets its
/// own substream keyed by (seed, index), so batched sampling produces
/// identical results whether indices run serially or in parallel.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 keyed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed);
    std::uint64_t a = mixer.next();
    SplitMix64 rng(a ^ (index * 0x9e3779b97f4a7c15ull));
    rng.next();  // decorrelate adjacent indices
    return rng;
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Unbiased uniform draw from {0, ..., n-1} via rejection; n >= 1.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    for (;;) {
      std::uint64_t v = next();
      if (v <= limit) return v % n;
    }
  }

  /// Uniform draw from the inclusive range {lo, ..., hi}.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

}  // namespace rns
