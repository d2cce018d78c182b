#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pww/torus.hpp"

namespace pww {

class SystemSpec;

/// Named constants for rotation numbers used throughout the experiments.
/// Knows "sqrt2m1" (sqrt(2)-1) and "golden" ((sqrt(5)-1)/2).
double named_irrational(const std::string& name);

/// Mod-1 affine functional x -> offset[i] + sum_j freqs[j] * t_j, used as the
/// cocycle of a tower extension.
struct TorusPhaseFn {
  std::vector<UnitInterval> fiber_offset;  // one entry per group index
  std::vector<std::int64_t> freqs;         // over the base torus coordinates

  UnitInterval operator()(const SystemState& x) const;
};

struct Rotation {
  std::vector<UnitInterval> alpha;
  bool irrational = true;
};

/// t -> (t1 + alpha, t2 + t1, ..., td + t(d-1)) on T^d.
struct UnipotentSkew {
  int dim = 2;
  UnitInterval alpha;
  bool irrational = true;
};

/// Two-fiber tower over T^2: (0,t1,t2) -> (1,t1,t2),
/// (1,t1,t2) -> (0, t1+alpha, t2+t1).  Ergodic, but its square splits.
struct Counterexample {
  UnitInterval alpha;
  bool irrational = true;
};

/// (x, t1..tk) -> (Tx, t1 + gamma(x) + b, t2 + t1, ..., tk + t(k-1)).
struct LesigneExtension {
  std::shared_ptr<const SystemSpec> base;
  TorusPhaseFn gamma;
  UnitInterval b;
  int depth = 1;
};

struct PowerOf {
  std::shared_ptr<const SystemSpec> base;
  std::int64_t m = 1;
};

/// One fiber branch of a system, as an affine torus map t -> A t + v landing
/// on fiber next_group.  Every system in scope acts this way.
struct AffineBranch {
  std::int64_t next_group = 0;
  std::vector<std::vector<std::int64_t>> matrix;  // d x d, row major
  std::vector<double> offset;                     // length d
};

struct IterateResult {
  SystemState state;
  bool closed_form = true;  // false when the n-fold map fell back to stepping
};

class SystemSpec {
 public:
  static SystemSpec rotation(std::vector<double> alpha, bool irrational);
  static SystemSpec unipotent_skew(int dim, double alpha, bool irrational);
  static SystemSpec counterexample(double alpha, bool irrational = true);
  static SystemSpec lesigne_extension(SystemSpec base, TorusPhaseFn gamma,
                                      double b, int depth);
  static SystemSpec power(SystemSpec base, std::int64_t m);

  std::int64_t group_order() const { return group_order_; }
  int dim() const { return dim_; }

  SystemState validated(const SystemState& x) const;
  void check_state(const SystemState& x) const;

  /// One application of T, in place.
  void step(SystemState& x) const;

  /// T^n x.  Uses the binomial closed form when the variant has one and every
  /// binomial fits in 64 bits; otherwise steps n times and says so.
  IterateResult iterate(const SystemState& x, std::int64_t n) const;

  AffineBranch fiber_action(std::int64_t group_index) const;

  const std::variant<Rotation, UnipotentSkew, Counterexample, LesigneExtension,
                     PowerOf>&
  node() const {
    return node_;
  }

  std::string kind() const;

 private:
  SystemSpec() = default;
  std::variant<Rotation, UnipotentSkew, Counterexample, LesigneExtension, PowerOf>
      node_;
  std::int64_t group_order_ = 1;
  int dim_ = 0;
};

/// Walks T x, T^2 x, ... with O(1) state.
class OrbitStream {
 public:
  OrbitStream(const SystemSpec& spec, SystemState start)
      : spec_(spec), x_(spec.validated(start)) {}

  const SystemState& next() {
    spec_.step(x_);
    return x_;
  }
  const SystemState& current() const { return x_; }

 private:
  const SystemSpec& spec_;
  SystemState x_;
};

/// C(n, k) if it fits in int64, otherwise nullopt.
std::optional<std::int64_t> binomial_checked(std::int64_t n, int k);

struct ErgodicityReport {
  std::vector<std::complex<double>> averages;  // one Birkhoff average per start
  double max_pairwise_deviation = 0.0;
};

/// Birkhoff averages of f from several starts; a large pairwise deviation
/// flags a decomposable (non-ergodic) system for this observable.
template <typename F>
ErgodicityReport ergodicity_probe(const SystemSpec& spec, F&& f,
                                  const std::vector<SystemState>& starts,
                                  std::int64_t n_steps) {
  ErgodicityReport rep;
  for (const auto& s : starts) {
    OrbitStream orbit(spec, s);
    ComplexSum acc;
    for (std::int64_t n = 0; n < n_steps; ++n) acc.add(f(orbit.next()));
    rep.averages.push_back(acc.value() / static_cast<double>(n_steps));
  }
  for (std::size_t i = 0; i < rep.averages.size(); ++i)
    for (std::size_t j = i + 1; j < rep.averages.size(); ++j)
      rep.max_pairwise_deviation = std::max(
          rep.max_pairwise_deviation, std::abs(rep.averages[i] - rep.averages[j]));
  return rep;
}

}  // namespace pww
