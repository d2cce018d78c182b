#pragma once

#include <cstdint>
#include <random>

namespace pww {

// Deterministic RNG used everywhere randomness is needed.  Values depend only
// on the seed and the call sequence, never on platform entropy.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // uniform in [0, 1) with 53 significant bits
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // unbiased uniform in [0, n)
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace pww
