#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace sqcolor {

/// SplitMix64 finaliser; used to derive independent per-chunk seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// mt19937_64 with a portable bounded draw, so sampled reports are identical
/// across standard libraries (std::uniform_int_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// `k` distinct values from {1..pool}, ascending.
  std::vector<int> sample(int pool, int k) {
    std::vector<int> items(pool);
    for (int i = 0; i < pool; ++i) items[i] = i + 1;
    for (int i = 0; i < k; ++i) {
      auto j = i + static_cast<int>(below(static_cast<std::uint64_t>(pool - i)));
      std::swap(items[i], items[j]);
    }
    items.resize(k);
    std::sort(items.begin(), items.end());
    return items;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sqcolor
