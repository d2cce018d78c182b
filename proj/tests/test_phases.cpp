#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "pww/fft.hpp"
#include "pww/phases.hpp"
#include "pww/rng.hpp"

using namespace pww;

TEST_CASE("fixed-point fractions are exact on dyadics") {
  for (double x : {0.25, 0.5, 0.75, 0x1.0p-40, 1.0 - 0x1.0p-40}) {
    CHECK(Phase128::from_double(x).to_double() == x);
  }
  // wraparound is reduction mod 1, bit for bit
  CHECK((Phase128::from_double(0.75) + Phase128::from_double(0.5)).bits() ==
        Phase128::from_double(0.25).bits());
  CHECK((-Phase128::from_double(0.25)).bits() == Phase128::from_double(0.75).bits());
  CHECK(Phase128::from_double(0.5).half(1).bits() == Phase128::from_double(0.25).bits());
  CHECK(Phase128::from_double(0.125).times(10).bits() == Phase128::from_double(0.25).bits());
  CHECK(Phase128::from_double(0.75).div_small(3).bits() == Phase128::from_double(0.25).bits());
}

TEST_CASE("div_small inverts times up to the last bits") {
  const Phase128 x = Phase128::from_double(0.6180339887498949);
  for (std::uint64_t d : {2ull, 3ull, 7ull, 97ull}) {
    const Phase128 back = x.div_small(d).times(d);
    // floor division: back <= x with a defect below d ulps of 2^-128
    CHECK((x - back).to_double() < 1e-30);
  }
}

TEST_CASE("polynomial phase sequences") {
  // P(n) = n/4 mod 1
  PolynomialPhase lin(std::vector<double>{0.0, 0.25});
  CHECK(lin.eval(1) == 0.25);
  CHECK(lin.eval(2) == 0.5);
  CHECK(lin.eval(3) == 0.75);
  CHECK(lin.eval(4) == 0.0);
  // P(n) = n^2/8 mod 1: 1/8, 4/8, 9/8 -> 1/8, 16/8 -> 0
  PolynomialPhase quad(std::vector<double>{0.0, 0.0, 0.125});
  CHECK(quad.eval(1) == 0.125);
  CHECK(quad.eval(2) == 0.5);
  CHECK(quad.eval(3) == 0.125);
  CHECK(quad.eval(4) == 0.0);
  CHECK(quad.degree() == 2);
}

TEST_CASE("degree cap is enforced") {
  std::vector<double> too_long(PolynomialPhase::kMaxDegree + 2, 0.1);
  CHECK_THROWS(PolynomialPhase(too_long));
}

TEST_CASE("difference table streams the exact Horner values") {
  Rng rng(7);
  for (int degree = 1; degree <= 4; ++degree) {
    std::vector<double> c;
    for (int j = 0; j <= degree; ++j) c.push_back(rng.unit());
    PolynomialPhase p(c);
    PhaseStream ps(p);
    for (std::int64_t n = 1; n <= 10000; ++n) {
      CHECK(ps.next_fixed().bits() == p.eval_fixed(n).bits());
    }
  }
}

TEST_CASE("stream rebuild checkpoints change nothing") {
  PolynomialPhase p(std::vector<double>{0.1, 0.2, 0.3});
  PhaseStream frequent(p, 1, 16);
  PhaseStream rare(p, 1, 1 << 20);
  for (std::int64_t n = 1; n <= 2000; ++n) {
    CHECK(frequent.next_fixed().bits() == rare.next_fixed().bits());
  }
}

TEST_CASE("weyl average matches the Dirichlet kernel") {
  const double alpha = 0.6180339887498949;
  const std::int64_t n = 1000;
  const auto avg = weyl_average(PolynomialPhase(std::vector<double>{0.0, alpha}), n);
  const double lhs = static_cast<double>(n) * std::abs(avg);
  const double rhs = std::abs(std::sin(std::numbers::pi * mul_mod1(n, alpha)) /
                              std::sin(std::numbers::pi * alpha));
  CHECK(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("integer coefficient shifts do not move the average") {
  // dyadic coefficients so the shifted doubles reduce exactly
  const std::int64_t n = 1000;
  const auto a = weyl_average(PolynomialPhase(std::vector<double>{0.0, 0.25, 0.75}), n);
  const auto b = weyl_average(PolynomialPhase(std::vector<double>{1.0, 1.25, 2.75}), n);
  CHECK(std::abs(a - b) < 1e-15);
}

TEST_CASE("batched linear scan equals the direct twists") {
  Rng rng(11);
  const std::int64_t n = 100, m = 16;
  std::vector<std::complex<double>> b;
  for (std::int64_t i = 0; i < n; ++i) b.push_back(cexp(rng.unit()));
  const auto bins = batched_linear_scan(b, n, m);
  for (std::int64_t j = 0; j < m; ++j) {
    ComplexSum acc;
    for (std::int64_t i = 1; i <= n; ++i)
      acc.add(cexp(mul_mod1(i * j, 1.0 / static_cast<double>(m))) * b[i - 1]);
    CHECK(std::abs(bins[static_cast<std::size_t>(j)] -
                   acc.value() / static_cast<double>(n)) < 1e-12);
  }
}

TEST_CASE("fold conserves mass") {
  std::vector<std::complex<double>> b(37, std::complex<double>(1.0, -2.0));
  const auto bins =
      fold_mod([&](std::int64_t n) { return b[static_cast<std::size_t>(n - 1)]; }, 37, 8);
  ComplexSum acc;
  for (const auto& z : bins) acc.add(z);
  CHECK(std::abs(acc.value() - std::complex<double>(37.0, -74.0)) < 1e-12);
}

TEST_CASE("next_pow2") {
  CHECK(next_pow2(1) == 1);
  CHECK(next_pow2(2) == 2);
  CHECK(next_pow2(3) == 4);
  CHECK(next_pow2(1000) == 1024);
  CHECK(next_pow2(1024) == 1024);
}

TEST_CASE("transform round trip") {
  Rng rng(3);
  const std::size_t n = 8;
  std::vector<std::complex<double>> v, fwd, back;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(rng.unit(), rng.unit());
  fwd.resize(n);
  back.resize(n);
  Dft dft(n);
  dft.forward(v.data(), fwd.data());
  dft.backward(fwd.data(), back.data());
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(std::abs(back[i] / static_cast<double>(n) - v[i]) < 1e-12);
  }
}
