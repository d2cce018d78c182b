#include "pww/systems.hpp"

#include <cmath>
#include <stdexcept>

#include "pww/phase128.hpp"

namespace pww {

double named_irrational(const std::string& name) {
  if (name == "sqrt2m1") return std::sqrt(2.0) - 1.0;
  if (name == "golden") return (std::sqrt(5.0) - 1.0) / 2.0;
  throw std::invalid_argument("unknown named constant: " + name);
}

UnitInterval TorusPhaseFn::operator()(const SystemState& x) const {
  if (x.group_index < 0 ||
      x.group_index >= static_cast<std::int64_t>(fiber_offset.size()))
    throw std::invalid_argument("group index outside cocycle domain");
  if (freqs.size() > x.coords.size())
    throw std::invalid_argument("cocycle frequency vector too long for state");
  UnitInterval p = fiber_offset[static_cast<std::size_t>(x.group_index)];
  for (std::size_t j = 0; j < freqs.size(); ++j)
    p += UnitInterval(mul_mod1(freqs[j], x.coords[j].value()));
  return p;
}

std::optional<std::int64_t> binomial_checked(std::int64_t n, int k) {
  if (k < 0 || n < 0) return std::nullopt;
  if (k > n) return 0;
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned __int128>(n - i + 1);
    c /= static_cast<unsigned __int128>(i);
    if (c > static_cast<unsigned __int128>(INT64_MAX)) return std::nullopt;
  }
  return static_cast<std::int64_t>(c);
}

SystemSpec SystemSpec::rotation(std::vector<double> alpha, bool irrational) {
  if (alpha.empty()) throw std::invalid_argument("rotation needs >= 1 coordinate");
  Rotation r;
  for (double a : alpha) r.alpha.emplace_back(a);
  r.irrational = irrational;
  SystemSpec s;
  s.dim_ = static_cast<int>(alpha.size());
  s.node_ = std::move(r);
  return s;
}

SystemSpec SystemSpec::unipotent_skew(int dim, double alpha, bool irrational) {
  if (dim < 1 || dim > 8)
    throw std::invalid_argument("unipotent skew dimension must be in [1, 8]");
  SystemSpec s;
  s.dim_ = dim;
  s.node_ = UnipotentSkew{dim, UnitInterval(alpha), irrational};
  return s;
}

SystemSpec SystemSpec::counterexample(double alpha, bool irrational) {
  SystemSpec s;
  s.dim_ = 2;
  s.group_order_ = 2;
  s.node_ = Counterexample{UnitInterval(alpha), irrational};
  return s;
}

SystemSpec SystemSpec::lesigne_extension(SystemSpec base, TorusPhaseFn gamma,
                                         double b, int depth) {
  if (depth < 1 || depth > 8)
    throw std::invalid_argument("extension depth must be in [1, 8]");
  if (static_cast<std::int64_t>(gamma.fiber_offset.size()) != base.group_order())
    throw std::invalid_argument("cocycle fiber offsets must match base group order");
  if (gamma.freqs.size() != static_cast<std::size_t>(base.dim()))
    throw std::invalid_argument("cocycle frequencies must match base dimension");
  SystemSpec s;
  s.dim_ = base.dim() + depth;
  s.group_order_ = base.group_order();
  s.node_ = LesigneExtension{std::make_shared<SystemSpec>(std::move(base)),
                             std::move(gamma), UnitInterval(b), depth};
  return s;
}

SystemSpec SystemSpec::power(SystemSpec base, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("power exponent must be >= 1");
  SystemSpec s;
  s.dim_ = base.dim();
  s.group_order_ = base.group_order();
  s.node_ = PowerOf{std::make_shared<SystemSpec>(std::move(base)), m};
  return s;
}

void SystemSpec::check_state(const SystemState& x) const {
  if (x.group_index < 0 || x.group_index >= group_order_)
    throw std::invalid_argument("state group index outside Z_q");
  if (x.coords.size() != static_cast<std::size_t>(dim_))
    throw std::invalid_argument("state dimension mismatch");
}

SystemState SystemSpec::validated(const SystemState& x) const {
  check_state(x);
  return x;
}

namespace {

// new t_j = t_j + t_{j-1}, then t_1 += alpha; backward loop keeps old values
void unipotent_step(std::vector<UnitInterval>& t, std::size_t lo, std::size_t hi,
                    UnitInterval alpha) {
  for (std::size_t j = hi; j > lo; --j) t[j] += t[j - 1];
  t[lo] += alpha;
}

}  // namespace

void SystemSpec::step(SystemState& x) const {
  check_state(x);
  if (const auto* r = std::get_if<Rotation>(&node_)) {
    for (std::size_t j = 0; j < r->alpha.size(); ++j) x.coords[j] += r->alpha[j];
  } else if (const auto* u = std::get_if<UnipotentSkew>(&node_)) {
    unipotent_step(x.coords, 0, static_cast<std::size_t>(u->dim - 1), u->alpha);
  } else if (const auto* c = std::get_if<Counterexample>(&node_)) {
    if (x.group_index == 0) {
      x.group_index = 1;
    } else {
      x.group_index = 0;
      x.coords[1] += x.coords[0];
      x.coords[0] += c->alpha;
    }
  } else if (const auto* l = std::get_if<LesigneExtension>(&node_)) {
    const UnitInterval g = l->gamma(x);
    const std::size_t bd = static_cast<std::size_t>(l->base->dim());
    SystemState bx;
    bx.group_index = x.group_index;
    bx.coords.assign(x.coords.begin(), x.coords.begin() + bd);
    l->base->step(bx);
    x.group_index = bx.group_index;
    std::copy(bx.coords.begin(), bx.coords.end(), x.coords.begin());
    const std::size_t k = static_cast<std::size_t>(l->depth);
    for (std::size_t j = bd + k - 1; j > bd; --j) x.coords[j] += x.coords[j - 1];
    x.coords[bd] += g + l->b;
  } else {
    const auto& p = std::get<PowerOf>(node_);
    for (std::int64_t i = 0; i < p.m; ++i) p.base->step(x);
  }
}

namespace {

// Closed form of the d-dimensional unipotent block from coordinate `lo`:
// t_j(n) = t_j + sum_{i=1}^{j-1} C(n,i) t_{j-i} + C(n,j) alpha.
// Exact reduction via mul_mod1; false if a binomial overflows.
bool unipotent_closed(std::vector<UnitInterval>& t, std::size_t lo, std::size_t d,
                      UnitInterval alpha, std::int64_t n) {
  std::vector<std::int64_t> binom(d + 1);
  for (std::size_t i = 1; i <= d; ++i) {
    auto b = binomial_checked(n, static_cast<int>(i));
    if (!b) return false;
    binom[i] = *b;
  }
  std::vector<UnitInterval> old(t.begin() + lo, t.begin() + lo + d);
  for (std::size_t j = 0; j < d; ++j) {
    UnitInterval v = old[j];
    for (std::size_t i = 1; i <= j; ++i)
      v += UnitInterval(mul_mod1(binom[i], old[j - i].value()));
    v += UnitInterval(mul_mod1(binom[j + 1], alpha.value()));
    t[lo + j] = v;
  }
  return true;
}

}  // namespace

IterateResult SystemSpec::iterate(const SystemState& x, std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("iterate requires n >= 0");
  check_state(x);
  IterateResult res{x, true};
  if (n == 0) return res;

  auto fallback = [&]() {
    res.state = x;
    for (std::int64_t i = 0; i < n; ++i) step(res.state);
    res.closed_form = false;
    return res;
  };

  if (const auto* r = std::get_if<Rotation>(&node_)) {
    for (std::size_t j = 0; j < r->alpha.size(); ++j)
      res.state.coords[j] += UnitInterval(mul_mod1(n, r->alpha[j].value()));
    return res;
  }
  if (const auto* u = std::get_if<UnipotentSkew>(&node_)) {
    if (!unipotent_closed(res.state.coords, 0, static_cast<std::size_t>(u->dim),
                          u->alpha, n))
      return fallback();
    return res;
  }
  if (const auto* c = std::get_if<Counterexample>(&node_)) {
    // T^2 fixes the fiber and acts as the 2d unipotent skew
    const std::int64_t half = n / 2;
    if (!unipotent_closed(res.state.coords, 0, 2, c->alpha, half))
      return fallback();
    if (n % 2 != 0) step(res.state);
    return res;
  }
  if (const auto* p = std::get_if<PowerOf>(&node_)) {
    if (n > INT64_MAX / p->m) return fallback();
    res = p->base->iterate(x, n * p->m);
    return res;
  }
  return fallback();  // tower extensions have orbit sums, not closed forms
}

AffineBranch SystemSpec::fiber_action(std::int64_t group_index) const {
  if (group_index < 0 || group_index >= group_order_)
    throw std::invalid_argument("group index outside Z_q");
  const std::size_t d = static_cast<std::size_t>(dim_);
  AffineBranch br;
  br.next_group = group_index;
  br.matrix.assign(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t j = 0; j < d; ++j) br.matrix[j][j] = 1;
  br.offset.assign(d, 0.0);

  if (const auto* r = std::get_if<Rotation>(&node_)) {
    for (std::size_t j = 0; j < d; ++j) br.offset[j] = r->alpha[j].value();
    return br;
  }
  if (const auto* u = std::get_if<UnipotentSkew>(&node_)) {
    for (std::size_t j = 1; j < d; ++j) br.matrix[j][j - 1] = 1;
    br.offset[0] = u->alpha.value();
    return br;
  }
  if (const auto* c = std::get_if<Counterexample>(&node_)) {
    if (group_index == 0) {
      br.next_group = 1;
    } else {
      br.next_group = 0;
      br.matrix[1][0] = 1;
      br.offset[0] = c->alpha.value();
    }
    return br;
  }
  if (const auto* l = std::get_if<LesigneExtension>(&node_)) {
    const AffineBranch base = l->base->fiber_action(group_index);
    const std::size_t bd = static_cast<std::size_t>(l->base->dim());
    br.next_group = base.next_group;
    for (std::size_t j = 0; j < bd; ++j) {
      for (std::size_t i = 0; i < bd; ++i) br.matrix[j][i] = base.matrix[j][i];
      br.offset[j] = base.offset[j];
    }
    // extension row 1 picks up the cocycle, later rows the previous coordinate
    for (std::size_t i = 0; i < l->gamma.freqs.size(); ++i)
      br.matrix[bd][i] = l->gamma.freqs[i];
    br.offset[bd] =
        (l->gamma.fiber_offset[static_cast<std::size_t>(group_index)] + l->b).value();
    for (std::size_t j = bd + 1; j < d; ++j) br.matrix[j][j - 1] = 1;
    return br;
  }
  const auto& p = std::get<PowerOf>(node_);
  AffineBranch acc = p.base->fiber_action(group_index);
  for (std::int64_t step_i = 1; step_i < p.m; ++step_i) {
    const AffineBranch nxt = p.base->fiber_action(acc.next_group);
    AffineBranch comp;
    comp.next_group = nxt.next_group;
    comp.matrix.assign(d, std::vector<std::int64_t>(d, 0));
    comp.offset.assign(d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < d; ++i) {
        std::int64_t s = 0;
        for (std::size_t t = 0; t < d; ++t) s += nxt.matrix[j][t] * acc.matrix[t][i];
        comp.matrix[j][i] = s;
      }
      double off = nxt.offset[j];
      for (std::size_t t = 0; t < d; ++t)
        off += static_cast<double>(nxt.matrix[j][t]) * acc.offset[t];
      comp.offset[j] = frac(off);
    }
    acc = std::move(comp);
  }
  return acc;
}

std::string SystemSpec::kind() const {
  if (std::holds_alternative<Rotation>(node_)) return "rotation";
  if (std::holds_alternative<UnipotentSkew>(node_)) return "unipotent";
  if (std::holds_alternative<Counterexample>(node_)) return "counterexample";
  if (std::holds_alternative<LesigneExtension>(node_)) return "lesigne";
  return "power";
}

}  // namespace pww
