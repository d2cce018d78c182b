#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "pww/phase128.hpp"
#include "pww/spectral.hpp"

using namespace pww;

namespace {
const double kGolden = named_irrational("golden");
const double kSqrt2m1 = named_irrational("sqrt2m1");
}  // namespace

TEST_CASE("character of a rotation is an eigenfunction") {
  const auto spec = SystemSpec::rotation({kGolden}, true);
  const auto h = Observable::character(1, 1, {1});
  const auto rel = verify_eigen_relation(spec, h, 64);
  CHECK(rel.accepted);
  CHECK(rel.residual < 1e-12);
  CHECK(std::abs(rel.eigenvalue - cexp(kGolden)) < 1e-12);
}

TEST_CASE("two-fiber eigenfunction catalog") {
  const auto spec = SystemSpec::counterexample(kSqrt2m1);
  for (std::int64_t m : {std::int64_t{-2}, std::int64_t{1}, std::int64_t{3}}) {
    for (int sign : {1, -1}) {
      const auto member = catalog_e1_counterexample(kSqrt2m1, m, sign);
      CHECK(member.level == 1);
      const auto rel = verify_eigen_relation(spec, member.form, 128);
      CHECK(rel.accepted);
      CHECK(rel.residual < 1e-12);
      const auto expect =
          static_cast<double>(sign) * cexp(mul_mod1(m, kSqrt2m1 / 2.0));
      CHECK(std::abs(rel.eigenvalue - expect) < 1e-12);
    }
  }
  const auto parity = catalog_e1_counterexample(kSqrt2m1, 0, -1);
  const auto rel = verify_eigen_relation(spec, parity.form, 64);
  CHECK(rel.accepted);
  CHECK(std::abs(rel.eigenvalue - std::complex<double>(-1.0, 0.0)) < 1e-12);
  CHECK(catalog_e1_counterexample(kSqrt2m1, 0, 1).level == 0);
  CHECK_THROWS(catalog_e1_counterexample(kSqrt2m1, 1, 2));
}

TEST_CASE("every catalog member verifies at its labeled level") {
  const auto spec = SystemSpec::counterexample(kSqrt2m1);
  for (std::int64_t m = -2; m <= 2; ++m) {
    for (std::int64_t r = -2; r <= 2; ++r) {
      for (int sign : {1, -1}) {
        const auto member = catalog_e2_member(kSqrt2m1, m, r, sign);
        const auto report = verify_quasi_level(spec, member.form, member.level, 256);
        CHECK_MESSAGE(report.accepted, member.provenance, " level ", member.level,
                      " detected ", report.detected);
      }
    }
  }
}

TEST_CASE("the vertical character is not quasi-periodic on the tower") {
  const auto spec = SystemSpec::counterexample(kSqrt2m1);
  const auto f = Observable::character(2, 2, {0, 1});
  const auto report = verify_quasi_level(spec, f, 2, 256);
  CHECK(!report.accepted);
  CHECK(report.detected == -1);
  CHECK(report.residuals.back() > 0.5);
}

TEST_CASE("levels across systems") {
  const auto cx = SystemSpec::counterexample(kSqrt2m1);
  const auto square = SystemSpec::power(cx, 2);
  const auto f2 = Observable::character(2, 2, {0, 1});
  CHECK(verify_quasi_level(square, f2, 2, 256).accepted);

  const auto skew3 = SystemSpec::unipotent_skew(3, kGolden, true);
  const auto f3 = Observable::character(1, 3, {0, 0, 1});
  CHECK(verify_quasi_level(skew3, f3, 3, 256).accepted);
  const auto wrong = verify_quasi_level(skew3, f3, 2, 256);
  CHECK(!wrong.accepted);
  CHECK(wrong.detected == -1);

  const auto rot = SystemSpec::rotation({kGolden}, true);
  CHECK(verify_quasi_level(rot, Observable::constant(1, 1, {1.0, 0.0}), 0, 16).accepted);
}

TEST_CASE("the multiplicative derivative drops the level by one") {
  const auto spec = SystemSpec::counterexample(kSqrt2m1);
  const auto member = catalog_e2_member(kSqrt2m1, 1, 0, 1);
  REQUIRE(member.level == 2);
  const auto derivative = member.form.pullback(spec) * member.form.conjugate();
  CHECK(verify_quasi_level(spec, derivative, 1, 256).accepted);
}

TEST_CASE("products of level-2 members stay at level 2") {
  const auto spec = SystemSpec::counterexample(kSqrt2m1);
  const auto a = catalog_e2_member(kSqrt2m1, 1, 0, 1);
  const auto b = catalog_e2_member(kSqrt2m1, 1, 1, 1);
  const auto report = verify_quasi_level(spec, a.form * b.form, 2, 256);
  CHECK(report.accepted);
  CHECK(report.detected == 2);
}

TEST_CASE("per-fiber entry completes to a verified member") {
  const auto spec = SystemSpec::counterexample(kSqrt2m1);
  const auto g = Observable::fiber_weighted(2, 2, {1.0, cexp(0.1)}, {2, 0});
  const auto member = catalog_e2_counterexample(kSqrt2m1, 1, g);
  CHECK(member.level == 2);
  CHECK(verify_quasi_level(spec, member.form, 2, 256).accepted);
  CHECK_THROWS(catalog_e2_counterexample(kSqrt2m1, 1, Observable::character(1, 2, {1, 0})));
}

TEST_CASE("quasi-periodicity survives taking powers of the map") {
  const auto base = SystemSpec::unipotent_skew(3, kGolden, true);
  const auto spec = SystemSpec::power(base, 2);
  const auto f = Observable::character(1, 3, {0, 0, 1});
  const auto report = verify_quasi_level(spec, f, 3, 256);
  CHECK(report.accepted);
}

TEST_CASE("orthogonality of the vertical character to the catalog") {
  const GridDomain dom{2, {32, 32}};
  const auto f = Observable::character(2, 2, {0, 1});
  const auto family = catalog_e2_family(kSqrt2m1, 4);
  CHECK(family.size() == 2 * 9 * 9);  // both signs, m and r in [-4, 4]
  const auto report = orthogonality_report(f, family, dom);
  CHECK(report.max_abs < 1e-10);
  CHECK(report.values.size() == family.size());

  // a member is not orthogonal to itself
  const auto self = orthogonality_report(family[0].form, {family[0]}, dom);
  CHECK(self.max_abs == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("orthogonality on the skew tower") {
  const GridDomain dom{1, {16, 16, 16}};
  const auto f = Observable::character(1, 3, {0, 0, 1});
  const auto family = skew_e2_characters(3, 4);
  const auto report = orthogonality_report(f, family, dom);
  CHECK(report.max_abs < 1e-10);
}

TEST_CASE("relation checks validate their inputs") {
  const auto rot = SystemSpec::rotation({kGolden}, true);
  CHECK_THROWS(verify_eigen_relation(rot, Observable::constant(1, 1, 0.0), 16));
  CHECK_THROWS(verify_quasi_level(rot, Observable::constant(1, 1, 0.5), 1, 16));
  CHECK_THROWS(verify_quasi_level(rot, Observable::constant(1, 1, 1.0), -1, 16));
}

TEST_CASE("sample states are deterministic and in range") {
  const auto spec = SystemSpec::counterexample(kSqrt2m1);
  const auto a = sample_states(spec, 32, 7);
  const auto b = sample_states(spec, 32, 7);
  REQUIRE(a.size() == 32);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].group_index == b[i].group_index);
    CHECK(a[i].group_index >= 0);
    CHECK(a[i].group_index < 2);
    REQUIRE(a[i].coords.size() == 2);
    for (int j = 0; j < 2; ++j) {
      CHECK(a[i].coords[j].value() == b[i].coords[j].value());
      CHECK(a[i].coords[j].value() >= 0.0);
      CHECK(a[i].coords[j].value() < 1.0);
    }
  }
}
