// Counter-based seeded generator. All randomness in the project flows through
// explicit Rng values so every experiment is reproducible from (seed, config)
// and byte-identical across platforms (no std::uniform_* distributions, whose
// outputs are implementation-defined).

#pragma once

#include <cmath>
#include <cstdint>

#include "caromlab/bits.hpp"

namespace caromlab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0,1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0,n) via masked rejection (unbiased, portable).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
    if ((n & (n - 1)) == 0) return next_u64() & (n - 1);
    int bits = 64;
    while (bits > 1 && (n - 1) >> (bits - 1) == 0) --bits;
    std::uint64_t mask = bits == 64 ? ~0ULL : ((1ULL << bits) - 1);
    for (;;) {
      std::uint64_t v = next_u64() & mask;
      if (v < n) return v;
    }
  }

  Bits bits(int width) {
    std::uint64_t v = next_u64();
    if (width < 64) v &= (1ULL << width) - 1;
    return Bits(v, width);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller, one sample per call.
  double gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // Independent child generator for a named stream (trial index, phase tag).
  Rng fork(std::uint64_t stream) { return Rng(derive(next_u64(), stream)); }

  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream ^ 0xC2B2AE3D27D4EB4FULL));
  }

 private:
  std::uint64_t state_;
};

}  // namespace caromlab
