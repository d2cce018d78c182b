#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>

#include "pww/observable.hpp"
#include "pww/phase128.hpp"
#include "pww/systems.hpp"
#include "pww/torus.hpp"

using namespace pww;

TEST_CASE("frac is total and lands in [0,1)") {
  CHECK(frac(1.25) == 0.25);
  CHECK(frac(-0.25) == 0.75);
  CHECK(frac(-1.0) == 0.0);
  CHECK(frac(3.0) == 0.0);
  CHECK(frac(0.0) == 0.0);
  // x - floor(x) rounds up to 1.0 for tiny negative x; must still be < 1
  CHECK(frac(-1e-20) == 0.0);
  CHECK_THROWS_AS(frac(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("cexp hits the axes") {
  CHECK(std::abs(cexp(0.0) - std::complex<double>(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(cexp(0.25) - std::complex<double>(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(cexp(0.5) - std::complex<double>(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(cexp(1.0) - std::complex<double>(1.0, 0.0)) < 1e-15);
}

TEST_CASE("mul_mod1 multiplies exactly") {
  CHECK(mul_mod1(3, 0.25) == 0.75);
  CHECK(mul_mod1(5, 0.25) == 0.25);
  // dyadic a: the product reduces exactly, no drift at large multipliers
  const double a = 754.0 / 1024.0;
  CHECK(mul_mod1(1'000'003, a) == frac((1'000'003 % 1024) * 754.0 / 1024.0));
  CHECK(mul_mod1(-3, 0.25) == 0.25);
  // against long-double reference on a generic value
  const double g = 0.6180339887498949;
  const long double exact = std::fmod(100000.0L * static_cast<long double>(g), 1.0L);
  CHECK(std::abs(mul_mod1(100000, g) - static_cast<double>(exact)) < 1e-15);
}

TEST_CASE("unit interval arithmetic wraps") {
  UnitInterval a(0.75), b(0.5);
  CHECK((a + b).value() == 0.25);
  CHECK((a - b).value() == 0.25);
  CHECK((b - a).value() == 0.75);
  CHECK(UnitInterval(1.5).value() == 0.5);
  CHECK(UnitInterval(-0.25).value() == 0.75);
}

TEST_CASE("compensated sum survives cancellation") {
  ComplexSum acc;
  const int n = 100000;
  for (int i = 0; i < n; ++i) acc.add(std::complex<double>(0.1, -0.1));
  for (int i = 0; i < n; ++i) acc.add(std::complex<double>(-0.1, 0.1));
  CHECK(std::abs(acc.value()) < 1e-12);
}

TEST_CASE("characters are orthonormal on exact grids") {
  GridDomain dom;
  dom.group_order = 1;
  dom.points_per_axis = {8};
  const auto e1 = Observable::character(1, 1, {1});
  const auto e2 = Observable::character(1, 1, {2});
  CHECK(std::abs(inner_product(e1, e1, dom) - 1.0) < 1e-13);
  CHECK(std::abs(inner_product(e1, e2, dom)) < 1e-13);
  // aliasing: frequency equal to the grid size folds back to the constant
  const auto e8 = Observable::character(1, 1, {8});
  CHECK(std::abs(inner_product(e8, Observable::constant(1, 1, 1.0), dom) - 1.0) < 1e-13);
}

TEST_CASE("group characters separate fibers") {
  GridDomain dom;
  dom.group_order = 2;
  dom.points_per_axis = {4, 4};
  const auto p = Observable::parity(2, 2);
  const auto one = Observable::constant(2, 2, 1.0);
  CHECK(std::abs(inner_product(p, one, dom)) < 1e-13);
  CHECK(std::abs(inner_product(p, p, dom) - 1.0) < 1e-13);
}

TEST_CASE("observable algebra: product, conjugate, pullback") {
  const auto f = Observable::character(1, 2, {1, 0});
  const auto g = Observable::character(1, 2, {0, 1});
  SystemState x;
  x.coords = {UnitInterval(0.3), UnitInterval(0.6)};
  const auto prod = f * g;
  CHECK(std::abs(prod(x) - f(x) * g(x)) < 1e-15);
  CHECK(std::abs(f.conjugate()(x) - std::conj(f(x))) < 1e-15);

  const auto spec = SystemSpec::unipotent_skew(2, 0.25, false);
  const auto fT = f.pullback(spec);
  SystemState y = x;
  spec.step(y);
  CHECK(std::abs(fT(x) - f(y)) < 1e-15);
}
