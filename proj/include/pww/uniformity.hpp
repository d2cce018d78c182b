#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pww/averages.hpp"
#include "pww/observable.hpp"
#include "pww/phases.hpp"
#include "pww/systems.hpp"

namespace pww {

struct SearchConfig {
  std::int64_t coarse_grid = 256;        // grid points per coefficient axis
  int refinement_rounds = 3;
  int multistart = 8;
  bool use_linear_transform_scan = true; // scan the c1 axis with one DFT per outer cell
  bool use_resonance_seeds = true;       // seed candidates fitted on arithmetic progressions
  bool certify = false;
  double target_eps = 1e-3;
  std::int64_t max_cells = 200000;       // certified mode: cap on scanned cells
  int threads = 1;
};

struct SearchLog {
  std::int64_t coarse_grid = 0;
  std::int64_t linear_bins = 0;    // DFT length used for the c1 axis (0 if unused)
  int refinement_rounds = 0;
  int multistart = 0;
  std::int64_t seed_candidates = 0;
  std::int64_t cells_scanned = 0;  // certified mode
  double cap_slack = 0.0;          // certified mode: final (max cap - value)
};

struct SupEstimate {
  double value = 0.0;
  PolynomialPhase argmax;          // c0 fixed to 0
  std::string mode;                // "heuristic" or "certified"
  double certificate_eps = 0.0;    // certified: true sup <= value + certificate_eps
  std::int64_t evaluations = 0;
  SearchLog log;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// sup over degree-<=k phases (c0 = 0) of |(1/N) sum e(P(n)) w(n)|, where
// w(n) = weights[n-1].  The returned value is always achieved at argmax.
SupEstimate sup_average(const std::vector<std::complex<double>>& weights, int degree,
                        const SearchConfig& cfg);

// Same with w(n) = f(T^n x).
SupEstimate sup_average(const SystemSpec& spec, const Observable& f, const SystemState& x,
                        int degree, std::int64_t n_max, const SearchConfig& cfg);

// The quadratic phase that prevents decay on the two-fiber system:
// coefficients (-t2, -t1/2 + a/4, -a/8) mod 1, built in exact fixed point.
// Requires x in the fiber {1} x T^2.
PolynomialPhase witness_phase_counterexample(double alpha, const SystemState& x);

// a(n) = e(alpha n^degree) f(T^n x) compared against its length-M block
// reconstruction; |difference| <= 2M/N.
BlockDecomposition block_decomposition_check(const SystemSpec& spec, const Observable& f,
                                             const SystemState& x, double alpha,
                                             std::int64_t m_block, std::int64_t n_max,
                                             int degree);

// Candidate coefficient vectors (c1..ck) fitted from the phases of w along
// short arithmetic progressions; finds resonant quadratics that a coarse grid
// cannot see.  degree must be 1 or 2.
std::vector<std::vector<Phase128>> resonance_seeds(const std::vector<std::complex<double>>& w,
                                                   int degree);

}  // namespace pww
