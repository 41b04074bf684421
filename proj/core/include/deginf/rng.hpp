#ifndef DEGINF_RNG_HPP
#define DEGINF_RNG_HPP

#include <cstdint>

namespace deginf {

/// splitmix64 (Steele/Lea/Vigna). The one-and-only generator in this project;
/// the exact update and the trial-derivation rule below are pinned so reports
/// are reproducible across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Unbiased integer in [lo, hi] by rejection.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t span = hi - lo + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + x % span;
  }

  /// Stream for trial `index`: seed XOR avalanche of the index. Independent
  /// streams per trial make the experiment order-free and parallelizable.
  static SplitMix64 derived(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(index * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
    return SplitMix64(seed ^ mixer.next());
  }

 private:
  std::uint64_t state_;
};

}  // namespace deginf

#endif
