#include "pww/averages.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pww/compensated.hpp"
#include "pww/fft.hpp"

namespace pww {

std::complex<double> twisted_average(const SystemSpec& spec, const Observable& f,
                                     const SystemState& x, const PolynomialPhase& p,
                                     std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("twisted_average: n_max must be >= 1");
  spec.check_state(x);
  OrbitStream orbit(spec, x);
  PhaseStream phase(p);
  ComplexSum acc;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const std::complex<double> twist = phase.next_point();
    acc.add(twist * f(orbit.next()));
  }
  return acc.value() / static_cast<double>(n_max);
}

AverageSeries average_series(const SystemSpec& spec, const Observable& f,
                             const SystemState& x, const PolynomialPhase& p,
                             const std::vector<std::int64_t>& checkpoints) {
  if (checkpoints.empty()) throw std::invalid_argument("average_series: no checkpoints");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1 || (i > 0 && checkpoints[i] <= checkpoints[i - 1]))
      throw std::invalid_argument("average_series: checkpoints must be strictly increasing and >= 1");
  }
  spec.check_state(x);
  AverageSeries out;
  out.checkpoints = checkpoints;
  out.values.reserve(checkpoints.size());
  OrbitStream orbit(spec, x);
  PhaseStream phase(p);
  ComplexSum acc;
  std::size_t next = 0;
  for (std::int64_t n = 1; n <= checkpoints.back(); ++n) {
    acc.add(phase.next_point() * f(orbit.next()));
    if (n == checkpoints[next]) {
      out.values.push_back(acc.value() / static_cast<double>(n));
      ++next;
    }
  }
  return out;
}

std::vector<std::complex<double>> orbit_weights(const SystemSpec& spec, const Observable& f,
                                                const SystemState& x, std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("orbit_weights: n_max must be >= 1");
  spec.check_state(x);
  std::vector<std::complex<double>> w;
  w.reserve(static_cast<std::size_t>(n_max));
  OrbitStream orbit(spec, x);
  for (std::int64_t n = 1; n <= n_max; ++n) w.push_back(f(orbit.next()));
  return w;
}

double two_scale_average(const std::function<std::complex<double>(std::int64_t)>& b,
                         double alpha, std::int64_t m_scale, std::int64_t n_scale) {
  if (m_scale < 1 || n_scale < 1)
    throw std::invalid_argument("two_scale_average: scales must be >= 1");
  // e(m*alpha) table, exact reduction of each multiple
  std::vector<std::complex<double>> twist(static_cast<std::size_t>(m_scale));
  for (std::int64_t m = 1; m <= m_scale; ++m)
    twist[static_cast<std::size_t>(m - 1)] = cexp(mul_mod1(m, alpha));
  CompensatedSum outer;
  for (std::int64_t n = 1; n <= n_scale; ++n) {
    ComplexSum inner;
    const std::int64_t base = m_scale * n;
    for (std::int64_t m = 1; m <= m_scale; ++m)
      inner.add(twist[static_cast<std::size_t>(m - 1)] * b(base + m));
    outer.add(std::abs(inner.value()) / static_cast<double>(m_scale));
  }
  return outer.value() / static_cast<double>(n_scale);
}

namespace {

// c[h] = sum_{n=1..N-h} a(n+h) conj(a(n)) for h = 0..H
std::vector<std::complex<double>> correlations(const std::vector<std::complex<double>>& a,
                                               std::int64_t n_max, std::int64_t h_max) {
  std::vector<std::complex<double>> c(static_cast<std::size_t>(h_max) + 1);
  if (h_max <= 64) {
    for (std::int64_t h = 0; h <= h_max; ++h) {
      ComplexSum s;
      for (std::int64_t n = 1; n + h <= n_max; ++n)
        s.add(a[static_cast<std::size_t>(n + h - 1)] * std::conj(a[static_cast<std::size_t>(n - 1)]));
      c[static_cast<std::size_t>(h)] = s.value();
    }
    return c;
  }
  // FFT autocorrelation: pad to L >= N + H, then the inverse transform of
  // |X|^2 recovers every lag in one pass.
  const std::size_t len = next_pow2(static_cast<std::size_t>(n_max + h_max));
  Dft dft(len);
  std::vector<std::complex<double>> buf(len, 0.0);
  std::copy(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n_max), buf.begin());
  std::vector<std::complex<double>> spectrum(len);
  dft.forward(buf.data(), spectrum.data());
  for (auto& z : spectrum) z = std::complex<double>(std::norm(z), 0.0);
  dft.backward(spectrum.data(), buf.data());
  const double scale = 1.0 / static_cast<double>(len);
  for (std::int64_t h = 0; h <= h_max; ++h)
    c[static_cast<std::size_t>(h)] = buf[static_cast<std::size_t>(h)] * scale;
  return c;
}

}  // namespace

VdcReport vdc_bound(const std::vector<std::complex<double>>& a, std::int64_t n_max,
                    std::int64_t h_max) {
  if (n_max < 1) throw std::invalid_argument("vdc_bound: n_max must be >= 1");
  if (h_max < 1 || h_max > n_max)
    throw std::invalid_argument("vdc_bound: need 1 <= h_max <= n_max");
  if (a.size() < static_cast<std::size_t>(n_max))
    throw std::invalid_argument("vdc_bound: sequence shorter than n_max");

  ComplexSum mean;
  for (std::int64_t n = 1; n <= n_max; ++n) mean.add(a[static_cast<std::size_t>(n - 1)]);
  const double nn = static_cast<double>(n_max);
  const double lhs = std::norm(mean.value() / nn);

  const auto corr = correlations(a, n_max, h_max);
  const double hh = static_cast<double>(h_max);
  const double front = (nn + hh) / (nn * (hh + 1.0));
  CompensatedSum weighted;
  for (std::int64_t h = 1; h <= h_max; ++h)
    weighted.add((hh + 1.0 - static_cast<double>(h)) * corr[static_cast<std::size_t>(h)].real());
  const double rhs = front * (corr[0].real() / nn) +
                     2.0 * front / (hh + 1.0) * (weighted.value() / nn);

  VdcReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  return r;
}

VdcReport vdc_bound(const std::function<std::complex<double>(std::int64_t)>& a,
                    std::int64_t n_max, std::int64_t h_max) {
  if (n_max < 1) throw std::invalid_argument("vdc_bound: n_max must be >= 1");
  std::vector<std::complex<double>> buf;
  buf.reserve(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) buf.push_back(a(n));
  return vdc_bound(buf, n_max, h_max);
}

BlockDecomposition block_decomposition(const std::vector<std::complex<double>>& a,
                                       std::int64_t m_block, std::int64_t n_max) {
  if (m_block < 1 || m_block > n_max)
    throw std::invalid_argument("block_decomposition: need 1 <= M <= N");
  if (a.size() < static_cast<std::size_t>(n_max + m_block))
    throw std::invalid_argument("block_decomposition: sequence must cover N + M terms");
  const std::int64_t k_blocks = n_max / m_block;
  ComplexSum full;
  for (std::int64_t n = 1; n <= n_max; ++n) full.add(a[static_cast<std::size_t>(n - 1)]);
  ComplexSum blocks;
  for (std::int64_t n = 1; n <= k_blocks; ++n) {
    ComplexSum inner;
    const std::int64_t base = m_block * n;
    for (std::int64_t m = 1; m <= m_block; ++m)
      inner.add(a[static_cast<std::size_t>(base + m - 1)]);
    blocks.add(inner.value() / static_cast<double>(m_block));
  }
  BlockDecomposition out;
  out.full = full.value() / static_cast<double>(n_max);
  out.blocks = blocks.value() / static_cast<double>(k_blocks);
  out.difference = std::abs(out.full - out.blocks);
  out.bound = 2.0 * static_cast<double>(m_block) / static_cast<double>(n_max);
  return out;
}

}  // namespace pww
