#pragma once

// Deterministic random draws. Only raw mt19937_64 output is used (no
// library distributions), so a given seed yields the same stream on
// every platform.

#include <cstdint>
#include <random>

namespace ringlab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t raw() { return g_(); }

  /// Uniform-enough draw in [lo, hi] (modulo bias is irrelevant for the
  /// small ranges used here); requires lo <= hi.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(g_() % span);
  }

  bool flip() { return (g_() & 1) != 0; }

 private:
  std::mt19937_64 g_;
};

}  // namespace ringlab
