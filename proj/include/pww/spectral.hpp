#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "pww/observable.hpp"
#include "pww/systems.hpp"
#include "pww/torus.hpp"

namespace pww {

inline constexpr std::uint64_t kDefaultSampleSeed = 12345;

// deterministic sample states: uniform fiber index, uniform coordinates
std::vector<SystemState> sample_states(const SystemSpec& spec, std::int64_t count,
                                       std::uint64_t seed = kDefaultSampleSeed);

struct EigenRelation {
  std::complex<double> eigenvalue;  // mean of h(Tx)/h(x), projected to modulus 1
  double residual = 0.0;            // max |h(Tx) - c h(x)| over the samples
  bool accepted = false;            // residual < 1e-9 and |c| within 1e-9 of 1
};

EigenRelation verify_eigen_relation(const SystemSpec& spec, const Observable& h,
                                    std::int64_t samples,
                                    std::uint64_t seed = kDefaultSampleSeed);

struct LevelReport {
  int claimed = 0;
  int detected = -1;                 // smallest j <= claimed with g_j constant; -1 if none
  bool accepted = false;             // detected == claimed
  std::vector<double> residuals;     // constancy defect of g_0..g_claimed
  std::vector<std::complex<double>> means;  // sample mean of each ladder entry
};

// Multiplicative-derivative ladder g_0 = f, g_{j+1} = (g_j o T) conj(g_j);
// level k holds exactly when g_k is a modulus-1 constant and g_{k-1} is not.
LevelReport verify_quasi_level(const SystemSpec& spec, const Observable& f, int claimed,
                               std::int64_t samples, std::uint64_t seed = kDefaultSampleSeed);

struct QuasiEigenfunction {
  int level = 0;
  Observable form;
  std::string provenance;
};

// Eigenfunctions of the two-fiber system: h(0,.) = e(m t1),
// h(1,.) = sign e(m a/2) e(m t1); eigenvalue sign e(m a/2).
QuasiEigenfunction catalog_e1_counterexample(double alpha, std::int64_t m, int sign);

// Level-2 member with fiber-0 character gamma0 e(r t1 + 2m t2); the second
// fiber is forced by the level-2 recursion up to a sign:
// gamma1 = gamma0 e((r a - m a/2)/2 + (sign < 0 ? 1/4 : 0)), frequency r + m.
QuasiEigenfunction catalog_e2_member(double alpha, std::int64_t m, std::int64_t r, int sign);

// Same family, entered through a per-fiber observable g in t1 (single
// character per fiber).  When g's second fiber already satisfies the matching
// condition it is kept verbatim; otherwise it is completed from fiber 0 with
// the principal sign.  The t2 factor e(2m t2) is always attached: without it
// no function of t1 alone has a finite level over an irrational rotation
// number, while orthogonality to e(t2) holds either way.
QuasiEigenfunction catalog_e2_counterexample(double alpha, std::int64_t m, const Observable& g);

// m in [-window, window], r in [-window, window], both signs
std::vector<QuasiEigenfunction> catalog_e2_family(double alpha, std::int64_t window);

// Characters e(a t1 + b t2) on a depth-d skew: level <= 2 members, used as the
// orthogonality window for decay experiments.
std::vector<QuasiEigenfunction> skew_e2_characters(std::int64_t dim, std::int64_t window);

struct OrthogonalityReport {
  double max_abs = 0.0;
  std::vector<double> values;  // |<f, member>| per family entry
};

OrthogonalityReport orthogonality_report(const Observable& f,
                                         const std::vector<QuasiEigenfunction>& family,
                                         const GridDomain& dom);

}  // namespace pww
