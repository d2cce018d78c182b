#include "pww/uniformity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <queue>

#include "pww/compensated.hpp"
#include "pww/fft.hpp"
#include "pww/parallel.hpp"

namespace pww {

namespace {

using Coeffs = std::vector<Phase128>;  // (c1..ck), c0 fixed to 0

bool lex_less(const Coeffs& a, const Coeffs& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].bits() != b[i].bits()) return a[i].bits() < b[i].bits();
  }
  return a.size() < b.size();
}

struct Candidate {
  double value = -1.0;
  Coeffs c;
};

// Strict "a should replace b": larger value wins, ties go to the
// lexicographically smaller coefficient vector.
bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  return lex_less(a.c, b.c);
}

PolynomialPhase with_zero_head(const Coeffs& c) {
  Coeffs full(c.size() + 1);
  std::copy(c.begin(), c.end(), full.begin() + 1);
  return PolynomialPhase(std::move(full));
}

struct Evaluator {
  const std::vector<std::complex<double>>& w;
  Candidate best;
  std::int64_t evals = 0;

  double operator()(const Coeffs& c) {
    ++evals;
    PhaseStream ps(with_zero_head(c));
    ComplexSum acc;
    for (const auto& z : w) acc.add(ps.next_point() * z);
    const double v = std::abs(acc.value()) / static_cast<double>(w.size());
    note({v, c});
    return v;
  }

  void note(const Candidate& cand) {
    if (best.c.empty() || better(cand, best)) best = cand;
  }
};

// c1 = j / m1 exactly, m1 a power of two
Phase128 bin_phase(std::size_t j, std::size_t m1) {
  int shift = 0;
  while ((std::size_t{1} << shift) < m1) ++shift;
  using rep = unsigned __int128;
  return Phase128(static_cast<rep>(j) << (128 - shift));
}

// One c1-axis sweep at fixed tail (c2..ck): fold w(n) e(tail phase) modulo m1,
// then a single length-m1 transform evaluates all c1 = j/m1 at once.
// Returns the best bin; `all_bins` optionally receives every bin value.
Candidate scan_c1(const std::vector<std::complex<double>>& w, const Coeffs& tail,
                  std::size_t m1, Dft& dft, std::vector<std::complex<double>>& bins,
                  std::vector<std::complex<double>>& spectrum,
                  std::vector<double>* all_bins = nullptr) {
  const std::size_t n_max = w.size();
  std::fill(bins.begin(), bins.end(), std::complex<double>(0.0, 0.0));
  const std::size_t mask = m1 - 1;
  if (tail.empty()) {
    for (std::size_t n = 1; n <= n_max; ++n) bins[n & mask] += w[n - 1];
  } else {
    Coeffs outer(tail.size() + 2);
    std::copy(tail.begin(), tail.end(), outer.begin() + 2);
    PhaseStream ps{PolynomialPhase(std::move(outer))};
    for (std::size_t n = 1; n <= n_max; ++n) bins[n & mask] += ps.next_point() * w[n - 1];
  }
  dft.backward(bins.data(), spectrum.data());
  const double scale = 1.0 / static_cast<double>(n_max);
  Candidate bin_best;
  std::size_t arg_j = 0;
  for (std::size_t j = 0; j < m1; ++j) {
    const double v = std::abs(spectrum[j]) * scale;
    if (all_bins) (*all_bins)[j] = v;
    if (v > bin_best.value) {
      bin_best.value = v;
      arg_j = j;
    }
  }
  bin_best.c.reserve(tail.size() + 1);
  bin_best.c.push_back(bin_phase(arg_j, m1));
  bin_best.c.insert(bin_best.c.end(), tail.begin(), tail.end());
  return bin_best;
}

// Walks one coordinate by golden-section inside [-h, h] around the current
// value.  |A| is not unimodal over a wide bracket, so the best point ever
// evaluated is kept rather than trusting the final interval.
void refine_coordinate(Evaluator& ev, Coeffs& c, std::size_t axis, double h, double tol) {
  const Phase128 center = c[axis];
  double line_best_t = 0.0;
  double line_best_v = ev(c);  // t = 0 keeps the incoming point in play
  auto probe = [&](double t) {
    c[axis] = center + Phase128::from_double(frac(t));
    const double v = ev(c);
    if (v > line_best_v) {
      line_best_v = v;
      line_best_t = t;
    }
    return v;
  };
  constexpr double kInvPhi = 0.6180339887498949;
  double a = -h, b = h;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = probe(x1);
  double f2 = probe(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = probe(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = probe(x1);
    }
  }
  c[axis] = center + Phase128::from_double(frac(line_best_t));
}

void check_config(const SearchConfig& cfg, int degree) {
  if (degree < 1 || degree > PolynomialPhase::kMaxDegree - 1)
    throw std::invalid_argument("sup_average: degree must be in [1, 7]");
  if (cfg.coarse_grid < 2) throw std::invalid_argument("sup_average: coarse_grid must be >= 2");
  if (!(cfg.target_eps > 0.0 && cfg.target_eps < 1.0))
    throw std::invalid_argument("sup_average: target_eps must lie in (0,1)");
  if (cfg.multistart < 1) throw std::invalid_argument("sup_average: multistart must be >= 1");
  if (cfg.refinement_rounds < 0)
    throw std::invalid_argument("sup_average: refinement_rounds must be >= 0");
  if (cfg.max_cells < 1) throw std::invalid_argument("sup_average: max_cells must be >= 1");
}

// 2*pi*(1/N) sum n^j |w(n)| for j = 0..degree, with a little headroom so the
// Lipschitz bound stays valid after rounding.
std::vector<double> lipschitz_constants(const std::vector<std::complex<double>>& w, int degree) {
  std::vector<double> lip(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int j = 0; j <= degree; ++j) {
    long double s = 0.0L;
    for (std::size_t n = 1; n <= w.size(); ++n)
      s += std::pow(static_cast<long double>(n), j) * std::abs(w[n - 1]);
    lip[static_cast<std::size_t>(j)] =
        static_cast<double>(2.0L * std::numbers::pi_v<long double> * s /
                            static_cast<long double>(w.size())) *
        (1.0 + 1e-9);
  }
  return lip;
}

double refinement_tolerance(double target_eps, double n_max, int j) {
  const double tol = target_eps / (2.0 * std::numbers::pi * std::pow(n_max, j));
  return std::max(tol, 0x1.0p-120);
}

std::vector<Candidate> top_candidates(std::vector<Candidate> pool, std::size_t count) {
  std::sort(pool.begin(), pool.end(), better);
  if (pool.size() > count) pool.resize(count);
  return pool;
}

SupEstimate finish(Evaluator& ev, const SearchConfig& cfg, SearchLog log, std::string mode,
                   double certificate_eps) {
  SupEstimate out;
  out.value = ev(ev.best.c);  // re-evaluated directly at the argmax
  out.argmax = with_zero_head(ev.best.c);
  out.mode = std::move(mode);
  out.certificate_eps = certificate_eps;
  out.log = log;
  out.log.coarse_grid = cfg.coarse_grid;
  out.log.refinement_rounds = cfg.refinement_rounds;
  out.log.multistart = cfg.multistart;
  out.evaluations = ev.evals;
  return out;
}

Coeffs decode_tail(std::int64_t index, int axes, std::int64_t grid) {
  Coeffs tail(static_cast<std::size_t>(axes));
  for (int a = 0; a < axes; ++a) {
    const std::int64_t digit = index % grid;
    index /= grid;
    tail[static_cast<std::size_t>(a)] =
        Phase128::from_double(static_cast<double>(digit) / static_cast<double>(grid));
  }
  return tail;
}

SupEstimate run_heuristic(const std::vector<std::complex<double>>& w, int degree,
                          const SearchConfig& cfg) {
  const std::size_t n_max = w.size();
  const std::int64_t grid = cfg.coarse_grid;
  Evaluator ev{w, {}, 0};
  SearchLog log;
  std::vector<Candidate> pool;

  std::size_t m1 = 0;
  if (cfg.use_linear_transform_scan) {
    m1 = next_pow2(std::max<std::size_t>(static_cast<std::size_t>(grid), 2 * n_max));
    log.linear_bins = static_cast<std::int64_t>(m1);
  }

  if (degree == 1) {
    if (m1 != 0) {
      Dft dft(m1);
      std::vector<std::complex<double>> bins(m1), spectrum(m1);
      std::vector<double> all_bins(m1);
      Candidate best = scan_c1(w, {}, m1, dft, bins, spectrum, &all_bins);
      ev.evals += static_cast<std::int64_t>(m1);
      ev.note(best);
      // top bins, ties toward smaller c1
      std::vector<std::size_t> order(m1);
      for (std::size_t j = 0; j < m1; ++j) order[j] = j;
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return all_bins[a] != all_bins[b] ? all_bins[a] > all_bins[b] : a < b;
      });
      for (std::size_t r = 0; r < order.size() && r < static_cast<std::size_t>(cfg.multistart);
           ++r)
        pool.push_back({all_bins[order[r]], Coeffs{bin_phase(order[r], m1)}});
    } else {
      for (std::int64_t j = 0; j < grid; ++j) {
        Coeffs c{Phase128::from_double(static_cast<double>(j) / static_cast<double>(grid))};
        pool.push_back({ev(c), std::move(c)});
      }
    }
  } else {
    const int axes = degree - 1;
    double combos_d = 1.0;
    for (int a = 0; a < axes; ++a) combos_d *= static_cast<double>(grid);
    if (combos_d > 1e7)
      throw std::invalid_argument(
          "sup_average: coarse grid too large for this degree; lower coarse_grid");
    const std::int64_t combos = static_cast<std::int64_t>(combos_d);

    std::vector<std::vector<Candidate>> chunk_pool;
    std::vector<std::int64_t> chunk_evals;
    std::mutex mu;
    int used_chunks = 0;
    for_chunks(combos, cfg.threads, [&](std::int64_t lo, std::int64_t hi, int chunk) {
      std::vector<Candidate> local;
      std::int64_t local_evals = 0;
      std::unique_ptr<Dft> dft;
      std::vector<std::complex<double>> bins, spectrum;
      if (m1 != 0) {
        std::lock_guard<std::mutex> lock(mu);  // planner is not thread-safe
        dft = std::make_unique<Dft>(m1);
        bins.resize(m1);
        spectrum.resize(m1);
      }
      Evaluator local_ev{w, {}, 0};
      for (std::int64_t idx = lo; idx < hi; ++idx) {
        const Coeffs tail = decode_tail(idx, axes, grid);
        if (m1 != 0) {
          local.push_back(scan_c1(w, tail, m1, *dft, bins, spectrum));
          local_evals += static_cast<std::int64_t>(m1);
        } else {
          Candidate cell;
          for (std::int64_t j = 0; j < grid; ++j) {
            Coeffs c;
            c.reserve(tail.size() + 1);
            c.push_back(
                Phase128::from_double(static_cast<double>(j) / static_cast<double>(grid)));
            c.insert(c.end(), tail.begin(), tail.end());
            const double v = local_ev(c);
            if (better({v, c}, cell)) cell = {v, c};
          }
          local.push_back(std::move(cell));
        }
      }
      local_evals += local_ev.evals;
      std::lock_guard<std::mutex> lock(mu);
      if (chunk >= static_cast<int>(chunk_pool.size())) {
        chunk_pool.resize(static_cast<std::size_t>(chunk) + 1);
        chunk_evals.resize(static_cast<std::size_t>(chunk) + 1, 0);
      }
      chunk_pool[static_cast<std::size_t>(chunk)] = std::move(local);
      chunk_evals[static_cast<std::size_t>(chunk)] = local_evals;
      used_chunks = std::max(used_chunks, chunk + 1);
    });
    // merged in chunk order, so the outcome does not depend on thread count
    for (int c = 0; c < used_chunks; ++c) {
      for (auto& cand : chunk_pool[static_cast<std::size_t>(c)]) {
        ev.note(cand);
        pool.push_back(std::move(cand));
      }
      ev.evals += chunk_evals[static_cast<std::size_t>(c)];
    }
  }

  // seeds: the zero phase plus progression-resonance fits
  std::vector<Coeffs> seeds;
  seeds.emplace_back(static_cast<std::size_t>(degree));
  if (cfg.use_resonance_seeds && degree <= 2) {
    auto fitted = resonance_seeds(w, degree);
    seeds.insert(seeds.end(), fitted.begin(), fitted.end());
  }
  log.seed_candidates = static_cast<std::int64_t>(seeds.size());
  for (auto& s : seeds) {
    const double v = ev(s);
    pool.push_back({v, std::move(s)});
  }

  auto starts = top_candidates(std::move(pool), static_cast<std::size_t>(cfg.multistart));

  const double nn = static_cast<double>(n_max);
  for (auto& start : starts) {
    Coeffs c = start.c;
    for (int round = 0; round < cfg.refinement_rounds; ++round) {
      for (int j = 1; j <= degree; ++j) {
        const std::size_t axis = static_cast<std::size_t>(j - 1);
        const double h = (j == 1 && m1 != 0) ? 2.0 / static_cast<double>(m1)
                                             : 1.0 / static_cast<double>(grid);
        refine_coordinate(ev, c, axis, h, refinement_tolerance(cfg.target_eps, nn, j));
      }
    }
  }

  return finish(ev, cfg, log, "heuristic", 0.0);
}

struct Cell {
  Coeffs lo;                  // outer corner (c2..ck)
  std::vector<double> width;  // dyadic, so corners stay exactly representable
  double cap = 0.0;
};

struct CellOrder {
  bool operator()(const Cell& a, const Cell& b) const {
    if (a.cap != b.cap) return a.cap < b.cap;  // max-heap on cap
    return lex_less(a.lo, b.lo);               // ties: lex-largest popped last
  }
};

SupEstimate run_certified(const std::vector<std::complex<double>>& w, int degree,
                          const SearchConfig& cfg) {
  const std::size_t n_max = w.size();
  const double eps = cfg.target_eps;
  const auto lip = lipschitz_constants(w, degree);
  Evaluator ev{w, {}, 0};
  SearchLog log;

  // The c1 axis is swept by a transform whose grid gap l1/(2m) is charged to
  // the cell cap.  Only cells already narrow in the outer coordinates need the
  // gap down at eps/4; wide cells are dominated by their own width term, so
  // they get away with a far coarser (cheaper) sweep.
  const double l1 = lip[1];
  const std::size_t m_fine =
      next_pow2(std::max<std::size_t>(2 * n_max, static_cast<std::size_t>(2.0 * l1 / eps) + 1));
  log.linear_bins = static_cast<std::int64_t>(m_fine);

  std::map<std::size_t, std::unique_ptr<Dft>> plans;
  std::vector<std::complex<double>> bins, spectrum;
  struct ScanResult {
    double value;
    double gap;  // c1 grid-gap share of the cap
  };
  auto scan_at = [&](const Coeffs& tail, std::size_t m) -> ScanResult {
    auto& plan = plans[m];
    if (!plan) plan = std::make_unique<Dft>(m);
    bins.resize(m);
    spectrum.resize(m);
    Candidate c = scan_c1(w, tail, m, *plan, bins, spectrum);
    ev.evals += static_cast<std::int64_t>(m);
    ev.note(c);
    ++log.cells_scanned;
    if (log.cells_scanned > cfg.max_cells) {
      double grid_points = 1.0;
      for (int j = 1; j <= degree; ++j)
        grid_points *= std::ceil(2.0 * std::numbers::pi * degree * std::pow(double(n_max), j) / eps);
      char msg[256];
      std::snprintf(msg, sizeof msg,
                    "certified search exceeded %lld cells; an equivalent one-shot uniform grid "
                    "would need about %.3g points",
                    static_cast<long long>(cfg.max_cells), grid_points);
      throw BudgetExceeded(msg);
    }
    return {c.value, l1 / (2.0 * static_cast<double>(m))};
  };

  // warm start with achieved lower bounds
  ev(Coeffs(static_cast<std::size_t>(degree)));
  if (cfg.use_resonance_seeds && degree <= 2) {
    for (auto& s : resonance_seeds(w, degree)) ev(s);
  }
  log.seed_candidates = ev.evals;

  if (degree == 1) {
    const ScanResult r = scan_at({}, m_fine);
    log.cap_slack = r.gap;
    return finish(ev, cfg, log, "certified", eps);
  }

  const int axes = degree - 1;
  auto width_term = [&](const std::vector<double>& width) {
    double t = 0.0;
    for (int a = 0; a < axes; ++a)
      t += lip[static_cast<std::size_t>(a) + 2] * width[static_cast<std::size_t>(a)] / 2.0;
    return t;
  };
  auto size_for = [&](double wterm) {
    const double want = l1 / (2.0 * std::max(eps / 4.0, wterm / 2.0));
    std::size_t m = 64;
    while (static_cast<double>(m) < want && m < m_fine) m <<= 1;
    return m;
  };
  auto scan_cell = [&](const Coeffs& center, const std::vector<double>& width) {
    const double wterm = width_term(width);
    const ScanResult r = scan_at(center, size_for(wterm));
    return r.value + r.gap + wterm;
  };
  auto center_of = [&](const Cell& cell) {
    Coeffs c(cell.lo);
    for (int a = 0; a < axes; ++a)
      c[static_cast<std::size_t>(a)] +=
          Phase128::from_double(cell.width[static_cast<std::size_t>(a)] / 2.0);
    return c;
  };

  std::priority_queue<Cell, std::vector<Cell>, CellOrder> heap;
  Cell root{Coeffs(static_cast<std::size_t>(axes)), std::vector<double>(axes, 1.0), 0.0};
  root.cap = scan_cell(center_of(root), root.width);
  heap.push(std::move(root));

  double cap_slack = 0.0;
  while (!heap.empty()) {
    Cell top = heap.top();
    heap.pop();
    cap_slack = top.cap - ev.best.value;
    if (top.cap <= ev.best.value + eps) break;  // max cap certified
    int split = 0;
    double score = -1.0;
    for (int a = 0; a < axes; ++a) {
      const double s = lip[static_cast<std::size_t>(a) + 2] * top.width[static_cast<std::size_t>(a)];
      if (s > score) {
        score = s;
        split = a;
      }
    }
    Cell lo_child = top, hi_child = top;
    lo_child.width[static_cast<std::size_t>(split)] /= 2.0;
    hi_child.width[static_cast<std::size_t>(split)] /= 2.0;
    hi_child.lo[static_cast<std::size_t>(split)] +=
        Phase128::from_double(hi_child.width[static_cast<std::size_t>(split)]);
    lo_child.cap = scan_cell(center_of(lo_child), lo_child.width);
    hi_child.cap = scan_cell(center_of(hi_child), hi_child.width);
    heap.push(std::move(lo_child));
    heap.push(std::move(hi_child));
  }

  log.cap_slack = std::max(cap_slack, 0.0);
  return finish(ev, cfg, log, "certified", eps);
}

}  // namespace

std::vector<std::vector<Phase128>> resonance_seeds(const std::vector<std::complex<double>>& w,
                                                   int degree) {
  if (degree != 1 && degree != 2)
    throw std::invalid_argument("resonance_seeds: degree must be 1 or 2");
  std::vector<Coeffs> out;
  const auto n_max = static_cast<std::int64_t>(w.size());
  const int samples = degree + 1;
  for (std::int64_t q = 1; q <= 3; ++q) {
    for (std::int64_t a = 0; a < q; ++a) {
      if (a + q * samples > n_max) continue;
      // phases of w along n = a + q*m, m = 1..samples
      std::vector<Phase128> theta;
      bool usable = true;
      for (int m = 1; m <= samples; ++m) {
        const auto z = w[static_cast<std::size_t>(a + q * m - 1)];
        if (std::abs(z) < 1e-9) {
          usable = false;
          break;
        }
        theta.push_back(Phase128::from_double(frac(std::arg(z) / (2.0 * std::numbers::pi))));
      }
      if (!usable) continue;
      if (degree == 1) {
        // theta(m) ~ u0 + u1 m; a canceling phase has c1 in -u1/q + (1/q)Z
        const Phase128 u1 = theta[1] - theta[0];
        const Phase128 base = (-u1).div_small(static_cast<std::uint64_t>(q));
        for (std::int64_t j = 0; j < q; ++j) {
          out.push_back({base + Phase128::from_double(static_cast<double>(j) /
                                                      static_cast<double>(q))});
        }
      } else {
        // theta(m) ~ u0 + u1 m + u2 m^2; the canceling pairs (c1, c2) live on
        // the lattice (-u1/q + Z/(2q^2)) x (-u2/q^2 + Z/(2q^2)) -- every slip
        // from taking mod-1 representatives is a multiple of 1/(2q^2).
        const Phase128 d1 = theta[1] - theta[0];
        const Phase128 d2 = theta[2] - theta[1];
        const Phase128 u2 = (d2 - d1).half(1);
        const Phase128 u1 = d1 - u2.times(3);
        const auto q2 = static_cast<std::uint64_t>(q * q);
        const Phase128 c2_base = (-u2).div_small(q2);
        const Phase128 c1_base = (-u1).div_small(static_cast<std::uint64_t>(q)) +
                                 u2.times(static_cast<std::uint64_t>(2 * a)).div_small(q2);
        const std::int64_t steps = 2 * q * q;
        const double step = 1.0 / static_cast<double>(steps);
        for (std::int64_t i = 0; i < steps; ++i) {
          const Phase128 c2 = c2_base + Phase128::from_double(step * static_cast<double>(i));
          for (std::int64_t j = 0; j < steps; ++j) {
            const Phase128 c1 = c1_base + Phase128::from_double(step * static_cast<double>(j));
            out.push_back({c1, c2});
          }
        }
      }
    }
  }
  return out;
}

SupEstimate sup_average(const std::vector<std::complex<double>>& weights, int degree,
                        const SearchConfig& cfg) {
  check_config(cfg, degree);
  if (weights.empty()) throw std::invalid_argument("sup_average: empty weights");
  return cfg.certify ? run_certified(weights, degree, cfg) : run_heuristic(weights, degree, cfg);
}

SupEstimate sup_average(const SystemSpec& spec, const Observable& f, const SystemState& x,
                        int degree, std::int64_t n_max, const SearchConfig& cfg) {
  return sup_average(orbit_weights(spec, f, x, n_max), degree, cfg);
}

PolynomialPhase witness_phase_counterexample(double alpha, const SystemState& x) {
  if (x.group_index != 1)
    throw std::invalid_argument("witness_phase_counterexample: state must lie in the fiber {1}");
  if (x.coords.size() != 2)
    throw std::invalid_argument("witness_phase_counterexample: state must have two coordinates");
  const Phase128 a = Phase128::from_double(frac(alpha));
  const Phase128 t1 = Phase128::from_double(x.coords[0].value());
  const Phase128 t2 = Phase128::from_double(x.coords[1].value());
  const Phase128 c0 = -t2;
  const Phase128 c1 = -t1.half(1) + a.half(2);
  const Phase128 c2 = -a.half(3);
  return PolynomialPhase(std::vector<Phase128>{c0, c1, c2});
}

BlockDecomposition block_decomposition_check(const SystemSpec& spec, const Observable& f,
                                             const SystemState& x, double alpha,
                                             std::int64_t m_block, std::int64_t n_max,
                                             int degree) {
  if (degree < 1 || degree > PolynomialPhase::kMaxDegree)
    throw std::invalid_argument("block_decomposition_check: bad degree");
  if (m_block < 1 || m_block > n_max)
    throw std::invalid_argument("block_decomposition_check: need 1 <= M <= N");
  std::vector<Phase128> c(static_cast<std::size_t>(degree) + 1);
  c[static_cast<std::size_t>(degree)] = Phase128::from_double(frac(alpha));
  PhaseStream ps{PolynomialPhase(std::move(c))};
  OrbitStream orbit(spec, x);
  std::vector<std::complex<double>> a;
  a.reserve(static_cast<std::size_t>(n_max + m_block));
  for (std::int64_t n = 1; n <= n_max + m_block; ++n)
    a.push_back(ps.next_point() * f(orbit.next()));
  return block_decomposition(a, m_block, n_max);
}

}  // namespace pww
