#include "pww/observable.hpp"

#include <stdexcept>

#include "pww/phase128.hpp"

namespace pww {

Observable::Observable(std::int64_t group_order, int dim, std::vector<ObsTerm> terms)
    : group_order_(group_order), dim_(dim), terms_(std::move(terms)) {
  if (group_order < 1 || dim < 0)
    throw std::invalid_argument("observable domain must have q >= 1, d >= 0");
  for (const auto& t : terms_) {
    if (t.coeff.size() != static_cast<std::size_t>(group_order) ||
        t.freqs.size() != static_cast<std::size_t>(group_order))
      throw std::invalid_argument("observable term must cover every fiber");
    for (const auto& fv : t.freqs)
      if (fv.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("frequency vector dimension mismatch");
  }
}

Observable Observable::character(std::int64_t q, int d,
                                 std::vector<std::int64_t> freqs,
                                 std::int64_t group_freq) {
  if (freqs.size() != static_cast<std::size_t>(d))
    throw std::invalid_argument("frequency vector dimension mismatch");
  ObsTerm t;
  for (std::int64_t i = 0; i < q; ++i) {
    t.coeff.push_back(cexp(static_cast<double>(group_freq * i) / static_cast<double>(q)));
    t.freqs.push_back(freqs);
  }
  return Observable(q, d, {std::move(t)});
}

Observable Observable::constant(std::int64_t q, int d, std::complex<double> value) {
  ObsTerm t;
  t.coeff.assign(static_cast<std::size_t>(q), value);
  t.freqs.assign(static_cast<std::size_t>(q),
                 std::vector<std::int64_t>(static_cast<std::size_t>(d), 0));
  return Observable(q, d, {std::move(t)});
}

Observable Observable::parity(std::int64_t q, int d) {
  if (q != 2) throw std::invalid_argument("parity observable needs Z_2 fibers");
  ObsTerm t;
  t.coeff = {1.0, -1.0};
  t.freqs.assign(2, std::vector<std::int64_t>(static_cast<std::size_t>(d), 0));
  return Observable(q, d, {std::move(t)});
}

Observable Observable::fiber_weighted(std::int64_t q, int d,
                                      std::vector<std::complex<double>> c,
                                      std::vector<std::int64_t> freqs) {
  if (c.size() != static_cast<std::size_t>(q))
    throw std::invalid_argument("need one coefficient per fiber");
  ObsTerm t;
  t.coeff = std::move(c);
  t.freqs.assign(static_cast<std::size_t>(q), std::move(freqs));
  return Observable(q, d, {std::move(t)});
}

std::complex<double> Observable::operator()(const SystemState& x) const {
  if (x.group_index < 0 || x.group_index >= group_order_ ||
      x.coords.size() != static_cast<std::size_t>(dim_))
    throw std::invalid_argument("state outside observable domain");
  const auto i = static_cast<std::size_t>(x.group_index);
  std::complex<double> v = 0.0;
  for (const auto& t : terms_) {
    double p = 0.0;
    const auto& fv = t.freqs[i];
    for (std::size_t j = 0; j < fv.size(); ++j)
      p += mul_mod1(fv[j], x.coords[j].value());
    v += t.coeff[i] * cexp(p);
  }
  return v;
}

Observable Observable::pullback(const SystemSpec& spec) const {
  if (spec.group_order() != group_order_ || spec.dim() != dim_)
    throw std::invalid_argument("observable/system domain mismatch");
  const std::size_t q = static_cast<std::size_t>(group_order_);
  const std::size_t d = static_cast<std::size_t>(dim_);
  std::vector<AffineBranch> branch;
  branch.reserve(q);
  for (std::size_t i = 0; i < q; ++i)
    branch.push_back(spec.fiber_action(static_cast<std::int64_t>(i)));

  std::vector<ObsTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    ObsTerm nt;
    nt.coeff.resize(q);
    nt.freqs.assign(q, std::vector<std::int64_t>(d, 0));
    for (std::size_t i = 0; i < q; ++i) {
      const auto& br = branch[i];
      const auto nx = static_cast<std::size_t>(br.next_group);
      const auto& fv = t.freqs[nx];
      // phase picked up from the affine offset, frequencies from A^T
      double p = 0.0;
      for (std::size_t j = 0; j < d; ++j) p += mul_mod1(fv[j], br.offset[j]);
      nt.coeff[i] = t.coeff[nx] * cexp(p);
      for (std::size_t j = 0; j < d; ++j) {
        std::int64_t s = 0;
        for (std::size_t r = 0; r < d; ++r) s += br.matrix[r][j] * fv[r];
        nt.freqs[i][j] = s;
      }
    }
    out.push_back(std::move(nt));
  }
  return Observable(group_order_, dim_, std::move(out));
}

Observable Observable::conjugate() const {
  std::vector<ObsTerm> out = terms_;
  for (auto& t : out) {
    for (auto& c : t.coeff) c = std::conj(c);
    for (auto& fv : t.freqs)
      for (auto& f : fv) f = -f;
  }
  return Observable(group_order_, dim_, std::move(out));
}

Observable Observable::operator*(const Observable& other) const {
  if (other.group_order_ != group_order_ || other.dim_ != dim_)
    throw std::invalid_argument("observable domain mismatch");
  const std::size_t q = static_cast<std::size_t>(group_order_);
  std::vector<ObsTerm> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      ObsTerm t;
      t.coeff.resize(q);
      t.freqs.resize(q);
      for (std::size_t i = 0; i < q; ++i) {
        t.coeff[i] = a.coeff[i] * b.coeff[i];
        t.freqs[i].resize(static_cast<std::size_t>(dim_));
        for (std::size_t j = 0; j < t.freqs[i].size(); ++j)
          t.freqs[i][j] = a.freqs[i][j] + b.freqs[i][j];
      }
      out.push_back(std::move(t));
    }
  }
  return Observable(group_order_, dim_, std::move(out));
}

double Observable::sup_bound() const {
  double s = 0.0;
  for (const auto& t : terms_) {
    double m = 0.0;
    for (const auto& c : t.coeff) m = std::max(m, std::abs(c));
    s += m;
  }
  return s;
}

}  // namespace pww
