#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pww/systems.hpp"
#include "pww/torus.hpp"

namespace pww {

/// One summand of an observable: on fiber i it is coeff[i] * e(freqs[i] . t).
/// Frequencies are kept per fiber because composing with a tower map mixes
/// them differently on each fiber.
struct ObsTerm {
  std::vector<std::complex<double>> coeff;
  std::vector<std::vector<std::int64_t>> freqs;
};

/// Finite combination of fiberwise characters on Z_q x T^d.  Closed under
/// conjugation, products and composition with any SystemSpec map, which is
/// what the quasi-eigenfunction ladder needs.
class Observable {
 public:
  Observable(std::int64_t group_order, int dim, std::vector<ObsTerm> terms);

  static Observable character(std::int64_t group_order, int dim,
                              std::vector<std::int64_t> freqs,
                              std::int64_t group_freq = 0);
  static Observable constant(std::int64_t group_order, int dim,
                             std::complex<double> value);
  /// (-1)^i on Z_2 fibers.
  static Observable parity(std::int64_t group_order, int dim);
  /// Per-fiber constants c[i] times e(freqs . t), same freqs on every fiber.
  static Observable fiber_weighted(std::int64_t group_order, int dim,
                                   std::vector<std::complex<double>> c,
                                   std::vector<std::int64_t> freqs);

  std::complex<double> operator()(const SystemState& x) const;

  Observable pullback(const SystemSpec& spec) const;  // x -> f(Tx)
  Observable conjugate() const;
  Observable operator*(const Observable& other) const;

  std::int64_t group_order() const { return group_order_; }
  int dim() const { return dim_; }
  const std::vector<ObsTerm>& terms() const { return terms_; }
  double sup_bound() const;

 private:
  std::int64_t group_order_;
  int dim_;
  std::vector<ObsTerm> terms_;
};

}  // namespace pww
