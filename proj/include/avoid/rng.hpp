#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace avoid {

/// Seeded mt19937_64 with hand-rolled draws. The engine's output stream is
/// fixed by the standard; the std:: distributions are not, so they are not
/// used anywhere a reproducible stream matters.
class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform on {0, ..., n-1}, n >= 1, by rejection (no modulo bias).
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace avoid
