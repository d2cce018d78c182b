#include "pww/phases.hpp"

#include "pww/fft.hpp"

namespace pww {

PolynomialPhase::PolynomialPhase(const std::vector<double>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("phase needs >= 1 coefficient");
  if (coeffs.size() > kMaxDegree + 1)
    throw std::invalid_argument("phase degree capped at 8");
  c_.reserve(coeffs.size());
  for (double c : coeffs) c_.push_back(Phase128::from_double(c));
}

PolynomialPhase::PolynomialPhase(std::vector<Phase128> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("phase needs >= 1 coefficient");
  if (c_.size() > kMaxDegree + 1)
    throw std::invalid_argument("phase degree capped at 8");
}

std::vector<double> PolynomialPhase::coeffs() const {
  std::vector<double> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.to_double());
  return out;
}

Phase128 PolynomialPhase::eval_fixed(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("phase evaluation needs n >= 0");
  const auto un = static_cast<std::uint64_t>(n);
  Phase128 r = c_.back();
  for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) r = r.times(un) + *it;
  return r;
}

DifferenceTable::DifferenceTable(const PolynomialPhase& p, std::int64_t n0) {
  const int k = p.degree();
  std::vector<Phase128> v(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) v[static_cast<std::size_t>(i)] = p.eval_fixed(n0 + i);
  for (int level = 1; level <= k; ++level)
    for (int i = k; i >= level; --i)
      v[static_cast<std::size_t>(i)] -= v[static_cast<std::size_t>(i - 1)];
  rows_ = std::move(v);
}

void DifferenceTable::advance() {
  for (std::size_t j = 0; j + 1 < rows_.size(); ++j) rows_[j] += rows_[j + 1];
}

PhaseStream::PhaseStream(PolynomialPhase p, std::int64_t start,
                         std::int64_t rebuild_every)
    : p_(std::move(p)), table_(p_, start), n_(start), rebuild_every_(rebuild_every) {
  if (rebuild_every_ < 1) throw std::invalid_argument("rebuild period must be >= 1");
}

Phase128 PhaseStream::next_fixed() {
  if (since_rebuild_ >= rebuild_every_) {
    table_ = DifferenceTable(p_, n_);
    since_rebuild_ = 0;
  }
  const Phase128 v = table_.value();
  table_.advance();
  ++n_;
  ++since_rebuild_;
  return v;
}

std::complex<double> weyl_average(const PolynomialPhase& p, std::int64_t n_max) {
  return weyl_average(p, [](std::int64_t) { return std::complex<double>(1.0, 0.0); },
                      n_max);
}

namespace {

std::vector<std::complex<double>> scan_from_bins(
    std::vector<std::complex<double>> bins, std::int64_t n_max) {
  Dft dft(bins.size());
  std::vector<std::complex<double>> out(bins.size());
  dft.backward(bins.data(), out.data());
  const double inv = 1.0 / static_cast<double>(n_max);
  for (auto& v : out) v *= inv;
  return out;
}

}  // namespace

std::vector<std::complex<double>> batched_linear_scan(
    const std::function<std::complex<double>(std::int64_t)>& b, std::int64_t n_max,
    std::int64_t m_bins) {
  return scan_from_bins(fold_mod(b, n_max, m_bins), n_max);
}

std::vector<std::complex<double>> batched_linear_scan(
    const std::vector<std::complex<double>>& b, std::int64_t n_max,
    std::int64_t m_bins) {
  if (static_cast<std::int64_t>(b.size()) < n_max)
    throw std::invalid_argument("sequence shorter than N");
  return scan_from_bins(
      fold_mod([&](std::int64_t n) { return b[static_cast<std::size_t>(n - 1)]; },
               n_max, m_bins),
      n_max);
}

}  // namespace pww
