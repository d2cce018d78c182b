#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "pww/compensated.hpp"

namespace pww {

/// Fractional part in [0, 1); total on all finite inputs, including negatives.
inline double frac(double x) {
  if (!std::isfinite(x)) throw std::domain_error("frac of non-finite value");
  double r = x - std::floor(x);
  if (r >= 1.0) r = 0.0;  // tiny negative x rounds x - floor(x) up to 1
  return r;
}

/// e(t) = exp(2*pi*i*t).
inline std::complex<double> cexp(double t) {
  const double a = 6.283185307179586476925286766559 * frac(t);
  return {std::cos(a), std::sin(a)};
}

/// A coordinate on the unit torus; every operation lands back in [0, 1).
class UnitInterval {
 public:
  UnitInterval() : v_(0.0) {}
  explicit UnitInterval(double x) : v_(frac(x)) {}

  double value() const { return v_; }

  /// Both operands already reduced, so one conditional subtract suffices
  /// (and is exact: s - 1 for s in [1, 2) loses no bits).
  friend UnitInterval operator+(UnitInterval a, UnitInterval b) {
    double s = a.v_ + b.v_;
    if (s >= 1.0) s -= 1.0;
    UnitInterval r;
    r.v_ = s;
    return r;
  }
  friend UnitInterval operator-(UnitInterval a, UnitInterval b) {
    double s = a.v_ - b.v_;
    if (s < 0.0) s += 1.0;
    UnitInterval r;
    r.v_ = s;
    return r;
  }
  UnitInterval& operator+=(UnitInterval o) { return *this = *this + o; }
  UnitInterval operator-() const { return UnitInterval() - *this; }
  bool operator==(const UnitInterval&) const = default;

 private:
  double v_;
};

inline std::complex<double> cexp(UnitInterval t) { return cexp(t.value()); }

/// Point of a system's state space Z_q x T^d.
struct SystemState {
  std::int64_t group_index = 0;
  std::vector<UnitInterval> coords;
};

/// Character chi(i, t) = e(group_freq * i / q + sum_j freqs[j] * t_j).
struct Character {
  std::int64_t group_order = 1;
  std::int64_t group_freq = 0;
  std::vector<std::int64_t> freqs;

  double phase(const SystemState& x) const;
  std::complex<double> operator()(const SystemState& x) const { return cexp(phase(x)); }
};

/// Equispaced product grid on Z_q x T^d; quadrature on it integrates
/// characters exactly as long as no tested frequency is a multiple of the
/// axis size.
struct GridDomain {
  std::int64_t group_order = 1;
  std::vector<std::int64_t> points_per_axis;

  std::int64_t total_points() const;
  void validate() const;
};

/// Quadrature average of f * conj(g) over the grid.
template <typename F, typename G>
std::complex<double> inner_product(F&& f, G&& g, const GridDomain& dom) {
  dom.validate();
  ComplexSum acc;
  SystemState x;
  x.coords.assign(dom.points_per_axis.size(), UnitInterval());
  std::vector<std::int64_t> idx(dom.points_per_axis.size(), 0);
  const std::int64_t total = dom.total_points();
  for (std::int64_t i = 0; i < dom.group_order; ++i) {
    x.group_index = i;
    std::fill(idx.begin(), idx.end(), 0);
    for (std::size_t a = 0; a < idx.size(); ++a) x.coords[a] = UnitInterval();
    while (true) {
      acc.add(f(x) * std::conj(g(x)));
      std::size_t axis = 0;
      for (; axis < idx.size(); ++axis) {
        if (++idx[axis] < dom.points_per_axis[axis]) {
          x.coords[axis] = UnitInterval(static_cast<double>(idx[axis]) /
                                        static_cast<double>(dom.points_per_axis[axis]));
          break;
        }
        idx[axis] = 0;
        x.coords[axis] = UnitInterval();
      }
      if (axis == idx.size()) break;
    }
  }
  return acc.value() / static_cast<double>(total);
}

}  // namespace pww
