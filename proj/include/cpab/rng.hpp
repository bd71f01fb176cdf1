#pragma once

#include <cstdint>

namespace cpab {

// splitmix64: tiny deterministic generator with identical output on every
// platform, so seeded fixtures and reports reproduce bitwise.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [lo, hi) with 53 bits of resolution.
  double uniform(double lo = 0.0, double hi = 1.0) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  // Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

} // namespace cpab
