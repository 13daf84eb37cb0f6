#pragma once

// SplitMix64, the single named generator behind every random choice.
// Version tag "splitmix64-v1"; with seed 0 the first three outputs are
// 0xe220a8397b1dcdaf, 0x6e789e6aa1b965f4, 0x06c45d188009454f.

#include <cstdint>
#include <utility>
#include <vector>

namespace gdom {

inline constexpr const char* kRngName = "splitmix64-v1";

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
  }

  /// Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

  /// Independent stream for trial `index` of a run seeded with `seed`.
  static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0xd1b54a32d192ed03ULL * (index + 1)));
    return SplitMix64(mix.next());
  }

 private:
  std::uint64_t state_;
};

}  // namespace gdom
