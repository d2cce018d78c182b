#include "pww/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pww/compensated.hpp"
#include "pww/phase128.hpp"
#include "pww/rng.hpp"

namespace pww {

namespace {

constexpr double kRelationTol = 1e-9;

std::string signed_str(std::int64_t v) { return (v >= 0 ? "+" : "") + std::to_string(v); }

}  // namespace

std::vector<SystemState> sample_states(const SystemSpec& spec, std::int64_t count,
                                       std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_states: count must be >= 1");
  Rng rng(seed);
  std::vector<SystemState> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t s = 0; s < count; ++s) {
    SystemState x;
    x.group_index = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(spec.group_order())));
    x.coords.reserve(static_cast<std::size_t>(spec.dim()));
    for (std::int64_t a = 0; a < spec.dim(); ++a) x.coords.emplace_back(rng.unit());
    out.push_back(std::move(x));
  }
  return out;
}

EigenRelation verify_eigen_relation(const SystemSpec& spec, const Observable& h,
                                    std::int64_t samples, std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("verify_eigen_relation: need samples >= 2");
  const auto states = sample_states(spec, samples, seed);
  std::vector<std::complex<double>> hx, htx;
  hx.reserve(states.size());
  htx.reserve(states.size());
  ComplexSum ratio_sum;
  for (const auto& x : states) {
    const auto v = h(x);
    if (std::abs(v) < 1e-12)
      throw std::domain_error("verify_eigen_relation: h vanishes at a sample point");
    SystemState y = x;
    spec.step(y);
    const auto w = h(y);
    hx.push_back(v);
    htx.push_back(w);
    ratio_sum.add(w / v);
  }
  std::complex<double> c = ratio_sum.value() / static_cast<double>(states.size());
  if (std::abs(c) >= 1e-12) c /= std::abs(c);  // modulus-1 projection
  EigenRelation out;
  out.eigenvalue = c;
  for (std::size_t i = 0; i < hx.size(); ++i)
    out.residual = std::max(out.residual, std::abs(htx[i] - c * hx[i]));
  out.accepted = out.residual < kRelationTol && std::abs(std::abs(c) - 1.0) < kRelationTol;
  return out;
}

LevelReport verify_quasi_level(const SystemSpec& spec, const Observable& f, int claimed,
                               std::int64_t samples, std::uint64_t seed) {
  if (claimed < 0 || claimed > 16)
    throw std::invalid_argument("verify_quasi_level: claimed level out of range");
  if (samples < 2) throw std::invalid_argument("verify_quasi_level: need samples >= 2");
  const auto states = sample_states(spec, samples, seed);
  for (const auto& x : states) {
    if (std::abs(std::abs(f(x)) - 1.0) > kRelationTol)
      throw std::invalid_argument("verify_quasi_level: f must have modulus 1");
  }
  LevelReport report;
  report.claimed = claimed;
  Observable g = f;
  for (int level = 0; level <= claimed; ++level) {
    ComplexSum sum;
    std::vector<std::complex<double>> values;
    values.reserve(states.size());
    for (const auto& x : states) {
      values.push_back(g(x));
      sum.add(values.back());
    }
    const auto mean = sum.value() / static_cast<double>(states.size());
    double residual = 0.0;
    for (const auto& v : values) residual = std::max(residual, std::abs(v - mean));
    report.means.push_back(mean);
    report.residuals.push_back(residual);
    const bool constant =
        residual < kRelationTol && std::abs(std::abs(mean) - 1.0) < kRelationTol;
    if (constant && report.detected < 0) report.detected = level;
    if (level < claimed) {
      g = g.pullback(spec) * g.conjugate();
      if (g.terms().size() > 4096)
        throw std::invalid_argument("verify_quasi_level: ladder term count explodes");
    }
  }
  report.accepted = report.detected == claimed;
  return report;
}

QuasiEigenfunction catalog_e1_counterexample(double alpha, std::int64_t m, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("catalog_e1_counterexample: sign must be +1 or -1");
  const double a = frac(alpha);
  const std::complex<double> c1 =
      static_cast<double>(sign) * cexp(mul_mod1(m, a / 2.0));
  Observable form = Observable::fiber_weighted(2, 2, {1.0, c1}, {m, 0});
  const int level = (m == 0 && sign == 1) ? 0 : 1;
  return {level, std::move(form), "e1(m=" + signed_str(m) + ",sign=" + signed_str(sign) + ")"};
}

QuasiEigenfunction catalog_e2_member(double alpha, std::int64_t m, std::int64_t r, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("catalog_e2_member: sign must be +1 or -1");
  const double a = frac(alpha);
  // second-fiber constant: square root of sign * e(r a - m a/2)
  double phase = frac(mul_mod1(r, a / 2.0) - mul_mod1(m, a / 4.0));
  if (sign < 0) phase = frac(phase + 0.25);
  const std::complex<double> gamma1 = cexp(phase);
  ObsTerm term;
  term.coeff = {1.0, gamma1};
  term.freqs = {{r, 2 * m}, {r + m, 2 * m}};
  Observable form(2, 2, {std::move(term)});
  // m = 0 with the + sign degenerates: the ratio condition then makes the
  // first derivative already constant, so the member is a true eigenfunction.
  int level = 2;
  if (m == 0 && sign == 1) level = (r == 0) ? 0 : 1;
  return {level, std::move(form),
          "e2(m=" + signed_str(m) + ",r=" + signed_str(r) + ",sign=" + signed_str(sign) + ")"};
}

QuasiEigenfunction catalog_e2_counterexample(double alpha, std::int64_t m, const Observable& g) {
  if (g.group_order() != 2)
    throw std::invalid_argument("catalog_e2_counterexample: g must live on two fibers");
  if (g.terms().size() != 1)
    throw std::invalid_argument("catalog_e2_counterexample: g must be a single character per fiber");
  const auto& term = g.terms()[0];
  for (int i = 0; i < 2; ++i) {
    if (std::abs(std::abs(term.coeff[static_cast<std::size_t>(i)]) - 1.0) > kRelationTol)
      throw std::invalid_argument("catalog_e2_counterexample: g must have modulus 1");
    for (std::size_t axis = 1; axis < term.freqs[static_cast<std::size_t>(i)].size(); ++axis) {
      if (term.freqs[static_cast<std::size_t>(i)][axis] != 0)
        throw std::invalid_argument("catalog_e2_counterexample: g may only depend on t1");
    }
  }
  const double a = frac(alpha);
  const std::int64_t r0 = term.freqs[0][0];
  const std::int64_t r1 = term.freqs[1][0];
  const auto gamma0 = term.coeff[0];
  auto gamma1 = term.coeff[1];
  // matching condition: (gamma1 conj(gamma0))^2 = +/- e(r0 a - m a/2)
  const auto ratio2 = std::pow(gamma1 * std::conj(gamma0), 2);
  const auto target = cexp(frac(mul_mod1(r0, a) - mul_mod1(m, a / 2.0)));
  const bool keeps = r1 == r0 + m &&
                     (std::abs(ratio2 - target) < kRelationTol ||
                      std::abs(ratio2 + target) < kRelationTol);
  if (!keeps)
    gamma1 = gamma0 * cexp(frac(mul_mod1(r0, a / 2.0) - mul_mod1(m, a / 4.0)));
  ObsTerm out_term;
  out_term.coeff = {gamma0, gamma1};
  out_term.freqs = {{r0, 2 * m}, {r0 + m, 2 * m}};
  Observable form(2, 2, {std::move(out_term)});
  // m = 0 with the + branch of the matching condition is degenerate: the
  // first derivative is already constant (see catalog_e2_member).
  int level = 2;
  if (m == 0) {
    const auto final_ratio2 = std::pow(gamma1 * std::conj(gamma0), 2);
    if (std::abs(final_ratio2 - target) < kRelationTol)
      level = (r0 == 0 && std::abs(gamma1 - gamma0) < kRelationTol) ? 0 : 1;
  }
  return {level, std::move(form),
          "e2(m=" + signed_str(m) + ",r=" + signed_str(r0) +
              (keeps ? ",fiber1=given)" : ",fiber1=completed)")};
}

std::vector<QuasiEigenfunction> catalog_e2_family(double alpha, std::int64_t window) {
  if (window < 0) throw std::invalid_argument("catalog_e2_family: window must be >= 0");
  std::vector<QuasiEigenfunction> family;
  family.reserve(static_cast<std::size_t>(2 * (2 * window + 1) * (2 * window + 1)));
  for (std::int64_t m = -window; m <= window; ++m)
    for (std::int64_t r = -window; r <= window; ++r)
      for (int sign : {1, -1}) family.push_back(catalog_e2_member(alpha, m, r, sign));
  return family;
}

std::vector<QuasiEigenfunction> skew_e2_characters(std::int64_t dim, std::int64_t window) {
  if (dim < 2) throw std::invalid_argument("skew_e2_characters: dim must be >= 2");
  if (window < 0) throw std::invalid_argument("skew_e2_characters: window must be >= 0");
  std::vector<QuasiEigenfunction> family;
  for (std::int64_t a = -window; a <= window; ++a) {
    for (std::int64_t b = -window; b <= window; ++b) {
      std::vector<std::int64_t> freqs(static_cast<std::size_t>(dim), 0);
      freqs[0] = a;
      freqs[1] = b;
      const int level = (a == 0 && b == 0) ? 0 : (b == 0 ? 1 : 2);
      family.push_back(
          {level, Observable::character(1, static_cast<int>(dim), std::move(freqs)),
           "char(a=" + signed_str(a) + ",b=" + signed_str(b) + ")"});
    }
  }
  return family;
}

OrthogonalityReport orthogonality_report(const Observable& f,
                                         const std::vector<QuasiEigenfunction>& family,
                                         const GridDomain& dom) {
  if (family.empty()) throw std::invalid_argument("orthogonality_report: empty family");
  OrthogonalityReport report;
  report.values.reserve(family.size());
  for (const auto& member : family) {
    const double v = std::abs(inner_product(f, member.form, dom));
    report.values.push_back(v);
    report.max_abs = std::max(report.max_abs, v);
  }
  return report;
}

}  // namespace pww
