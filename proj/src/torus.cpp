#include "pww/torus.hpp"

#include "pww/phase128.hpp"

namespace pww {

double mul_mod1(std::int64_t k, double a) {
  if (k < 0) {
    const double r = mul_mod1(-k, a);
    return r == 0.0 ? 0.0 : 1.0 - r;
  }
  a = frac(a);
  if (a == 0.0 || k == 0) return 0.0;
  int exp;
  const double m = std::frexp(a, &exp);  // a = m * 2^exp
  const int e = 53 - exp;                // a = mant / 2^e, e >= 53
  if (e > 127) {
    // a < 2^-74: k*a < 2^-11, no reduction can occur
    return k * a;
  }
  using u128 = unsigned __int128;
  const auto mant = static_cast<u128>(static_cast<std::uint64_t>(std::ldexp(m, 53)));
  const u128 prod = static_cast<u128>(k) * mant;       // < 2^116
  const u128 fracbits = prod & ((u128(1) << e) - 1);   // k*mant mod 2^e
  return std::ldexp(static_cast<double>(fracbits), -e);
}

double Character::phase(const SystemState& x) const {
  if (x.coords.size() != freqs.size())
    throw std::invalid_argument("character/state dimension mismatch");
  double p = group_order > 1
                 ? frac(static_cast<double>(group_freq * x.group_index) /
                        static_cast<double>(group_order))
                 : 0.0;
  for (std::size_t j = 0; j < freqs.size(); ++j)
    p += mul_mod1(freqs[j], x.coords[j].value());
  return frac(p);
}

std::int64_t GridDomain::total_points() const {
  std::int64_t n = group_order;
  for (auto g : points_per_axis) n *= g;
  return n;
}

void GridDomain::validate() const {
  if (group_order < 1) throw std::invalid_argument("grid group order must be >= 1");
  for (auto g : points_per_axis)
    if (g < 1) throw std::invalid_argument("grid axis size must be >= 1");
}

}  // namespace pww
