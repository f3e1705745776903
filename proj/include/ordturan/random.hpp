#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace ordturan {

/// SplitMix64 finaliser; derives independent stream seeds from one seed.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seeded generator with platform-independent derived draws (the standard
/// distributions are implementation-defined, mt19937_64 itself is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on {k * 2^-53 : 1 <= k < 2^53}, strictly inside (0,1).
  double open01() {
    for (;;) {
      const std::uint64_t k = engine_() >> 11;
      if (k != 0) return static_cast<double>(k) * 0x1.0p-53;
    }
  }

  /// Uniform on {k * 2^-52 : 1 <= k < 2^52}; 1 + result is exact.
  double open01_coarse() {
    for (;;) {
      const std::uint64_t k = engine_() >> 12;
      if (k != 0) return static_cast<double>(k) * 0x1.0p-52;
    }
  }

  /// Uniform integer in [0, bound), by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      const std::uint64_t r = engine_();
      if (r < limit) return r % bound;
    }
  }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ordturan
