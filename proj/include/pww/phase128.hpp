#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace pww {

/// A point on the unit circle's phase line, stored as a 128-bit fixed-point
/// fraction of one turn.  Integer wraparound *is* reduction mod 1, so sums,
/// differences and integer multiples of phases are exact.  A double converts
/// exactly whenever |x| has its lowest set bit at position >= -128 (true for
/// every double >= 2^-75 in magnitude).
class Phase128 {
 public:
  using rep = unsigned __int128;

  constexpr Phase128() : bits_(0) {}
  constexpr explicit Phase128(rep bits) : bits_(bits) {}

  static Phase128 from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("phase from non-finite value");
    double f = x - std::floor(x);
    if (f >= 1.0) f = 0.0;  // x was a hair below an integer and rounded up
    if (f == 0.0) return Phase128();
    int exp;
    const double m = std::frexp(f, &exp);  // f = m * 2^exp, m in [0.5, 1)
    const auto mant = static_cast<rep>(static_cast<std::uint64_t>(std::ldexp(m, 53)));
    const int shift = 128 + exp - 53;  // f * 2^128 = mant * 2^shift
    if (shift >= 128) return Phase128();          // can't happen for f < 1
    if (shift >= 0) return Phase128(mant << shift);
    return Phase128(shift > -64 ? mant >> -shift : rep(0));
  }

  /// Truncated 53-bit view; always in [0, 1).
  double to_double() const {
    const auto hi = static_cast<std::uint64_t>(bits_ >> 64);
    return static_cast<double>(hi >> 11) * 0x1.0p-53;
  }

  rep bits() const { return bits_; }

  friend Phase128 operator+(Phase128 a, Phase128 b) { return Phase128(a.bits_ + b.bits_); }
  friend Phase128 operator-(Phase128 a, Phase128 b) { return Phase128(a.bits_ - b.bits_); }
  Phase128 operator-() const { return Phase128(rep(0) - bits_); }
  Phase128& operator+=(Phase128 o) { bits_ += o.bits_; return *this; }
  Phase128& operator-=(Phase128 o) { bits_ -= o.bits_; return *this; }
  bool operator==(const Phase128&) const = default;

  /// Exact division by 2^s (shifts bits below 2^-128 away).
  Phase128 half(int s = 1) const { return Phase128(s >= 128 ? rep(0) : bits_ >> s); }

  /// this * n mod 1, exact (wraparound multiplication).
  Phase128 times(std::uint64_t n) const { return Phase128(bits_ * rep(n)); }

  /// Truncating division of the representative in [0,1); the result r
  /// satisfies r*d == *this up to d * 2^-128.
  Phase128 div_small(std::uint64_t d) const { return Phase128(bits_ / rep(d)); }

  Phase128 times_signed(std::int64_t n) const {
    return n >= 0 ? times(static_cast<std::uint64_t>(n))
                  : -times(static_cast<std::uint64_t>(-n));
  }

 private:
  rep bits_;
};

/// k * a mod 1, computed exactly from the binary expansion of the double a.
/// Used for closed-form orbit coordinates, where k is a binomial coefficient.
double mul_mod1(std::int64_t k, double a);

}  // namespace pww
