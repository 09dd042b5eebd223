#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>

namespace hcc {

// Deterministic random source for everything that must reproduce bit-exactly
// across platforms. std::mt19937_64 output is pinned by the standard; the
// derived draws below deliberately avoid std::*_distribution, whose results
// are implementation-defined.
//
// Draw layout per call:
//   next_u64   one engine step
//   uniform01  one engine step, top 53 bits
//   below(n)   one or more engine steps (mask + reject)
//   normal     two engine steps per Box-Muller pair, second value cached
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform on {0, ..., n-1}, unbiased.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
    std::uint64_t v;
    do {
      v = engine_() & mask;
    } while (v >= n);
    return v;
  }

  // Standard normal via Box-Muller; u1 is shifted into (0,1] so the log stays finite.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    constexpr double kTwoPi = 6.283185307179586476925287;
    const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    has_spare_ = true;
    return r * std::cos(kTwoPi * u2);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// splitmix64 finalizer, used to derive independent seeds from a base seed.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace hcc
