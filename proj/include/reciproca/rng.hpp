#pragma once

#include <cstdint>
#include <random>

namespace reciproca {

// Deterministic RNG for property checks and the verify command. The raw
// mt19937_64 stream is mapped to doubles explicitly so output is identical
// across standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi], inclusive, via rejection.
  long long integer(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return lo + static_cast<long long>(x % span);
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace reciproca
