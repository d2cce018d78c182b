#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "pww/observable.hpp"
#include "pww/phases.hpp"
#include "pww/systems.hpp"

namespace pww {

// (1/N) sum_{n=1..N} e(P(n)) f(T^n x)
std::complex<double> twisted_average(const SystemSpec& spec, const Observable& f,
                                     const SystemState& x, const PolynomialPhase& p,
                                     std::int64_t n_max);

struct AverageSeries {
  std::vector<std::int64_t> checkpoints;       // strictly increasing, >= 1
  std::vector<std::complex<double>> values;    // running average at each checkpoint
};

// One pass over the orbit; records the running average at each checkpoint.
AverageSeries average_series(const SystemSpec& spec, const Observable& f,
                             const SystemState& x, const PolynomialPhase& p,
                             const std::vector<std::int64_t>& checkpoints);

// w[n-1] = f(T^n x) for n = 1..n_max
std::vector<std::complex<double>> orbit_weights(const SystemSpec& spec, const Observable& f,
                                                const SystemState& x, std::int64_t n_max);

// (1/N) sum_{n=1..N} | (1/M) sum_{m=1..M} e(m a) b(M n + m) |
// b is consulted at indices M+1 .. M(N+1).
double two_scale_average(const std::function<std::complex<double>(std::int64_t)>& b,
                         double alpha, std::int64_t m_scale, std::int64_t n_scale);

struct VdcReport {
  double lhs = 0.0;    // |(1/N) sum a(n)|^2
  double rhs = 0.0;    // correlation-sum bound
  double slack = 0.0;  // rhs - lhs, nonnegative up to rounding
};

// Finite van der Corput inequality:
//   lhs <= (N+H)/(N(H+1)) * (1/N) sum |a(n)|^2
//        + 2 (N+H)/(N(H+1)^2) * sum_{h=1..H} (H+1-h) Re[(1/N) sum_{n=1..N-h} a(n+h) conj(a(n))]
// Requires 1 <= H <= N.  Large H switches to an FFT autocorrelation.
VdcReport vdc_bound(const std::vector<std::complex<double>>& a, std::int64_t n_max,
                    std::int64_t h_max);
VdcReport vdc_bound(const std::function<std::complex<double>(std::int64_t)>& a,
                    std::int64_t n_max, std::int64_t h_max);

struct BlockDecomposition {
  std::complex<double> full;    // (1/N) sum_{n=1..N} a(n)
  std::complex<double> blocks;  // (1/K) sum_{n=1..K} (1/M) sum_{m=1..M} a(Mn+m), K = floor(N/M)
  double difference = 0.0;
  double bound = 0.0;           // 2M/N, assuming |a| <= 1
};

// a holds a(1)..a(L) with L >= N + M; requires 1 <= M <= N.
BlockDecomposition block_decomposition(const std::vector<std::complex<double>>& a,
                                       std::int64_t m_block, std::int64_t n_max);

}  // namespace pww
