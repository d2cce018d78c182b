#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "pww/compensated.hpp"
#include "pww/phase128.hpp"
#include "pww/torus.hpp"

namespace pww {

/// P(n) = c_0 + c_1 n + ... + c_k n^k, taken mod 1.  Coefficients live in
/// [0, 1) as exact 128-bit fractions, so evaluation at any integer n is exact:
/// phase identities (periodicity, integer-coefficient invariance) hold to the
/// last bit instead of drifting with n.
class PolynomialPhase {
 public:
  static constexpr int kMaxDegree = 8;

  PolynomialPhase() : c_(1) {}  // the zero phase
  explicit PolynomialPhase(const std::vector<double>& coeffs);
  explicit PolynomialPhase(std::vector<Phase128> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Phase128 coeff_fixed(int j) const { return c_.at(static_cast<std::size_t>(j)); }
  double coeff(int j) const { return c_.at(static_cast<std::size_t>(j)).to_double(); }
  std::vector<double> coeffs() const;

  /// Horner mod 1; exact for the stored coefficients.
  Phase128 eval_fixed(std::int64_t n) const;
  double eval(std::int64_t n) const { return eval_fixed(n).to_double(); }
  std::complex<double> at(std::int64_t n) const { return cexp(eval(n)); }

 private:
  std::vector<Phase128> c_;
};

/// Forward-difference table of a PolynomialPhase: advancing one step costs
/// exactly degree() mod-1 additions, and the top row stays pinned at the
/// constant k! * c_k mod 1.
class DifferenceTable {
 public:
  DifferenceTable(const PolynomialPhase& p, std::int64_t n0);

  Phase128 value() const { return rows_[0]; }  // P(current n)
  void advance();                              // move to n+1
  const std::vector<Phase128>& rows() const { return rows_; }

 private:
  std::vector<Phase128> rows_;
};

/// Streams P(start), P(start+1), ... via the difference table, rebuilding it
/// from direct evaluation every `rebuild_every` steps.  With exact phase
/// arithmetic the rebuild is a consistency checkpoint, not an error reset.
class PhaseStream {
 public:
  explicit PhaseStream(PolynomialPhase p, std::int64_t start = 1,
                       std::int64_t rebuild_every = 1 << 16);

  Phase128 next_fixed();
  double next() { return next_fixed().to_double(); }
  std::complex<double> next_point() { return cexp(next_fixed().to_double()); }

 private:
  PolynomialPhase p_;
  DifferenceTable table_;
  std::int64_t n_;
  std::int64_t rebuild_every_;
  std::int64_t since_rebuild_ = 0;
};

/// (1/N) sum_{n=1..N} e(P(n)) w(n), compensated.
template <typename W>
std::complex<double> weyl_average(const PolynomialPhase& p, W&& w, std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("average needs N >= 1");
  PhaseStream ps(p);
  ComplexSum acc;
  for (std::int64_t n = 1; n <= n_max; ++n) acc.add(ps.next_point() * w(n));
  return acc.value() / static_cast<double>(n_max);
}

std::complex<double> weyl_average(const PolynomialPhase& p, std::int64_t n_max);

/// All M linear twists at once: element j is (1/N) sum_{n=1..N} e(nj/M) b(n),
/// computed by folding b mod M and taking one DFT — O(N + M log M) instead of
/// O(N M).
std::vector<std::complex<double>> batched_linear_scan(
    const std::function<std::complex<double>(std::int64_t)>& b, std::int64_t n_max,
    std::int64_t m_bins);

std::vector<std::complex<double>> batched_linear_scan(
    const std::vector<std::complex<double>>& b, std::int64_t n_max,
    std::int64_t m_bins);

/// Fold b into residue classes mod M: out[r] = sum_{n<=N, n=r mod M} b(n).
/// The DFT of this vector is the linear scan; exposed for reuse by searches
/// that keep their own plans.
template <typename B>
std::vector<std::complex<double>> fold_mod(B&& b, std::int64_t n_max,
                                           std::int64_t m_bins) {
  if (n_max < 1 || m_bins < 1)
    throw std::invalid_argument("fold needs N >= 1 and M >= 1");
  std::vector<std::complex<double>> bins(static_cast<std::size_t>(m_bins), 0.0);
  std::int64_t r = 1 % m_bins;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    bins[static_cast<std::size_t>(r)] += b(n);
    if (++r == m_bins) r = 0;
  }
  return bins;
}

}  // namespace pww
