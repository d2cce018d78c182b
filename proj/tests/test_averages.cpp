#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "pww/averages.hpp"
#include "pww/compensated.hpp"
#include "pww/phase128.hpp"
#include "pww/rng.hpp"

using namespace pww;

namespace {

SystemState state(std::int64_t i, std::vector<double> t) {
  SystemState x;
  x.group_index = i;
  for (double v : t) x.coords.emplace_back(v);
  return x;
}

std::vector<std::complex<double>> random_unimodular(std::uint64_t seed, std::int64_t n) {
  Rng rng(seed);
  std::vector<std::complex<double>> a;
  a.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) a.push_back(cexp(rng.unit()));
  return a;
}

}  // namespace

TEST_CASE("untwisted average of a constant is the constant") {
  const auto spec = SystemSpec::rotation({0.0}, false);
  const auto one = Observable::constant(1, 1, 1.0);
  const auto avg = twisted_average(spec, one, state(0, {0.2}), PolynomialPhase(), 100);
  CHECK(std::abs(avg - 1.0) < 1e-14);
}

TEST_CASE("orbit weights are the twisted terms") {
  const auto spec = SystemSpec::rotation({0.25}, false);
  const auto f = Observable::character(1, 1, {1});
  const auto w = orbit_weights(spec, f, state(0, {0.0}), 4);
  const std::complex<double> expect[] = {{0, 1}, {-1, 0}, {0, -1}, {1, 0}};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(w[i] - expect[i]) < 1e-14);
}

TEST_CASE("series checkpoints must increase") {
  const auto spec = SystemSpec::rotation({0.1}, true);
  const auto f = Observable::character(1, 1, {1});
  CHECK_THROWS(average_series(spec, f, state(0, {0.0}), PolynomialPhase(), {10, 10}));
  CHECK_THROWS(average_series(spec, f, state(0, {0.0}), PolynomialPhase(), {0, 10}));
  const auto series = average_series(spec, f, state(0, {0.0}), PolynomialPhase(), {1, 2, 4});
  CHECK(series.values.size() == 3);
  // prefix averages agree with one-shot computation
  const auto direct = twisted_average(spec, f, state(0, {0.0}), PolynomialPhase(), 4);
  CHECK(std::abs(series.values[2] - direct) < 1e-14);
}

TEST_CASE("shift bound on the all-ones sequence") {
  // N=4, H=1: lhs = 1, rhs = 5/8 + 2*5/16 * (3/4) = 1.09375
  const std::vector<std::complex<double>> ones(4, 1.0);
  const auto r = vdc_bound(ones, 4, 1);
  CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(1.09375).epsilon(1e-14));
  // H=N=4: front 0.4, correlation part 0.16 * 5 = 0.8
  const auto edge = vdc_bound(ones, 4, 4);
  CHECK(edge.rhs == doctest::Approx(1.2).epsilon(1e-14));
  CHECK_THROWS(vdc_bound(ones, 4, 5));
  CHECK_THROWS(vdc_bound(ones, 4, 0));
}

TEST_CASE("shift bound slack is nonnegative on random data") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
    const auto a = random_unimodular(seed, 1000);
    for (std::int64_t n : {100, 1000}) {
      for (std::int64_t h : {std::int64_t{1}, std::int64_t{5}, std::int64_t{31}, n}) {
        const auto r = vdc_bound(a, n, h);
        CHECK(r.slack >= -1e-10);
      }
    }
  }
}

TEST_CASE("transform correlations equal direct loops") {
  // h large enough to take the transform path; recompute the bound naively
  const auto a = random_unimodular(42, 300);
  const std::int64_t n = 300, h_max = 100;
  const auto r = vdc_bound(a, n, h_max);
  ComplexSum mean;
  for (std::int64_t i = 0; i < n; ++i) mean.add(a[static_cast<std::size_t>(i)]);
  const double lhs = std::norm(mean.value() / static_cast<double>(n));
  const double front = static_cast<double>(n + h_max) /
                       (static_cast<double>(n) * static_cast<double>(h_max + 1));
  double corr = 0.0;
  for (std::int64_t h = 1; h <= h_max; ++h) {
    ComplexSum c;
    for (std::int64_t i = 1; i + h <= n; ++i)
      c.add(a[static_cast<std::size_t>(i + h - 1)] *
            std::conj(a[static_cast<std::size_t>(i - 1)]));
    corr += static_cast<double>(h_max + 1 - h) * c.value().real() / static_cast<double>(n);
  }
  const double rhs = front + 2.0 * front / static_cast<double>(h_max + 1) * corr;
  CHECK(std::abs(r.lhs - lhs) < 1e-12);
  CHECK(std::abs(r.rhs - rhs) < 1e-12);
}

TEST_CASE("two-scale average of a linear character is a Dirichlet kernel") {
  const double alpha = 0.6180339887498949;
  const double beta = 0.41421356237309515;
  auto b = [&](std::int64_t j) { return cexp(mul_mod1(j, beta)); };
  for (std::int64_t m : {std::int64_t{8}, std::int64_t{32}}) {
    const double got = two_scale_average(b, alpha, m, 256);
    const double t = frac(alpha + beta);
    const double expect = std::abs(std::sin(std::numbers::pi * mul_mod1(m, t))) /
                          (static_cast<double>(m) * std::abs(std::sin(std::numbers::pi * t)));
    CHECK(std::abs(got - expect) < 1e-9);
  }
}

TEST_CASE("two-scale average of ones") {
  auto one = [](std::int64_t) { return std::complex<double>(1.0, 0.0); };
  const double alpha = 0.25;
  // inner sum: (i - 1 + i - i - 1)/4... directly: e(1/4)+e(1/2)+e(3/4)+e(1) = 0
  CHECK(two_scale_average(one, alpha, 4, 100) < 1e-14);
  CHECK(two_scale_average(one, 0.0, 4, 100) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("block reconstruction differs by at most 2M/N") {
  Rng rng(9);
  for (int rep = 0; rep < 10; ++rep) {
    const std::int64_t n = 200 + static_cast<std::int64_t>(rng.below(800));
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng.below(64));
    const auto a = random_unimodular(100 + static_cast<std::uint64_t>(rep), n + m);
    const auto d = block_decomposition(a, m, n);
    CHECK(d.bound == doctest::Approx(2.0 * static_cast<double>(m) /
                                     static_cast<double>(n)));
    CHECK(d.difference <= d.bound + 1e-10);
  }
  const std::vector<std::complex<double>> ones(64, 1.0);
  const auto exact = block_decomposition(ones, 4, 32);
  CHECK(std::abs(exact.full - 1.0) < 1e-14);
  CHECK(exact.difference < 1e-14);
}
