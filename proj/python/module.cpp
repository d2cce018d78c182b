#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pww/averages.hpp"
#include "pww/spectral.hpp"
#include "pww/uniformity.hpp"

namespace py = pybind11;
using namespace pww;

namespace {

SystemState make_state(std::int64_t group, const std::vector<double>& coords) {
  SystemState x;
  x.group_index = group;
  for (double c : coords) x.coords.emplace_back(c);
  return x;
}

std::vector<double> coord_values(const SystemState& x) {
  std::vector<double> out;
  out.reserve(x.coords.size());
  for (const auto& c : x.coords) out.push_back(c.value());
  return out;
}

}  // namespace

PYBIND11_MODULE(pww, m) {
  m.doc() = "twisted polynomial ergodic averages on cyclic-group x torus systems";

  m.def("frac", &frac, py::arg("x"));
  m.def("cexp", [](double t) { return cexp(t); }, py::arg("t"));
  m.def("mul_mod1", &mul_mod1, py::arg("k"), py::arg("a"));
  m.def("named_irrational", &named_irrational, py::arg("name"));

  py::class_<SystemState>(m, "SystemState")
      .def(py::init(&make_state), py::arg("group"), py::arg("coords"))
      .def_readonly("group_index", &SystemState::group_index)
      .def_property_readonly("coords", &coord_values)
      .def("__repr__", [](const SystemState& x) {
        std::string s = "SystemState(group=" + std::to_string(x.group_index) + ", coords=[";
        for (std::size_t i = 0; i < x.coords.size(); ++i)
          s += (i ? ", " : "") + std::to_string(x.coords[i].value());
        return s + "])";
      });

  py::class_<IterateResult>(m, "IterateResult")
      .def_readonly("state", &IterateResult::state)
      .def_readonly("closed_form", &IterateResult::closed_form);

  py::class_<SystemSpec>(m, "SystemSpec")
      .def_static("rotation", &SystemSpec::rotation, py::arg("alpha"),
                  py::arg("irrational") = true)
      .def_static("unipotent_skew", &SystemSpec::unipotent_skew, py::arg("dim"),
                  py::arg("alpha"), py::arg("irrational") = true)
      .def_static("counterexample", &SystemSpec::counterexample, py::arg("alpha"),
                  py::arg("irrational") = true)
      .def_static("power", &SystemSpec::power, py::arg("base"), py::arg("m"))
      .def_property_readonly("group_order", &SystemSpec::group_order)
      .def_property_readonly("dim", &SystemSpec::dim)
      .def_property_readonly("kind", &SystemSpec::kind)
      .def("step",
           [](const SystemSpec& spec, const SystemState& x) {
             SystemState y = spec.validated(x);
             spec.step(y);
             return y;
           },
           py::arg("x"))
      .def("iterate", &SystemSpec::iterate, py::arg("x"), py::arg("n"));

  py::class_<Observable>(m, "Observable")
      .def_static("character", &Observable::character, py::arg("group_order"),
                  py::arg("dim"), py::arg("freqs"), py::arg("group_freq") = 0)
      .def_static("constant", &Observable::constant, py::arg("group_order"),
                  py::arg("dim"), py::arg("value"))
      .def_static("parity", &Observable::parity, py::arg("group_order"), py::arg("dim"))
      .def_static("fiber_weighted", &Observable::fiber_weighted, py::arg("group_order"),
                  py::arg("dim"), py::arg("coeffs"), py::arg("freqs"))
      .def("__call__", &Observable::operator(), py::arg("x"))
      .def("pullback", &Observable::pullback, py::arg("spec"))
      .def("conjugate", &Observable::conjugate)
      .def("__mul__", &Observable::operator*);

  py::class_<PolynomialPhase>(m, "PolynomialPhase")
      .def(py::init<const std::vector<double>&>(), py::arg("coeffs"))
      .def_property_readonly("degree", &PolynomialPhase::degree)
      .def("coeffs", &PolynomialPhase::coeffs)
      .def("eval", &PolynomialPhase::eval, py::arg("n"))
      .def("at", &PolynomialPhase::at, py::arg("n"));

  m.def("weyl_average",
        [](const PolynomialPhase& p, std::int64_t n) { return weyl_average(p, n); },
        py::arg("phase"), py::arg("n"));
  m.def("batched_linear_scan",
        [](const std::vector<std::complex<double>>& b, std::int64_t n, std::int64_t bins) {
          return batched_linear_scan(b, n, bins);
        },
        py::arg("b"), py::arg("n"), py::arg("bins"));

  m.def("twisted_average", &twisted_average, py::arg("spec"), py::arg("f"), py::arg("x"),
        py::arg("phase"), py::arg("n"));
  py::class_<AverageSeries>(m, "AverageSeries")
      .def_readonly("checkpoints", &AverageSeries::checkpoints)
      .def_readonly("values", &AverageSeries::values);
  m.def("average_series", &average_series, py::arg("spec"), py::arg("f"), py::arg("x"),
        py::arg("phase"), py::arg("checkpoints"));
  m.def("orbit_weights", &orbit_weights, py::arg("spec"), py::arg("f"), py::arg("x"),
        py::arg("n"));
  m.def("two_scale_average", &two_scale_average, py::arg("b"), py::arg("alpha"),
        py::arg("m_scale"), py::arg("n_scale"));

  py::class_<VdcReport>(m, "VdcReport")
      .def_readonly("lhs", &VdcReport::lhs)
      .def_readonly("rhs", &VdcReport::rhs)
      .def_readonly("slack", &VdcReport::slack);
  m.def("vdc_bound",
        [](const std::vector<std::complex<double>>& a, std::int64_t n, std::int64_t h) {
          return vdc_bound(a, n, h);
        },
        py::arg("a"), py::arg("n"), py::arg("h"));

  py::class_<BlockDecomposition>(m, "BlockDecomposition")
      .def_readonly("full", &BlockDecomposition::full)
      .def_readonly("blocks", &BlockDecomposition::blocks)
      .def_readonly("difference", &BlockDecomposition::difference)
      .def_readonly("bound", &BlockDecomposition::bound);
  m.def("block_decomposition", &block_decomposition, py::arg("a"), py::arg("m_block"),
        py::arg("n"));
  m.def("block_decomposition_check", &block_decomposition_check, py::arg("spec"),
        py::arg("f"), py::arg("x"), py::arg("alpha"), py::arg("m_block"), py::arg("n"),
        py::arg("degree"));

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init<>())
      .def_readwrite("coarse_grid", &SearchConfig::coarse_grid)
      .def_readwrite("refinement_rounds", &SearchConfig::refinement_rounds)
      .def_readwrite("multistart", &SearchConfig::multistart)
      .def_readwrite("use_linear_transform_scan", &SearchConfig::use_linear_transform_scan)
      .def_readwrite("use_resonance_seeds", &SearchConfig::use_resonance_seeds)
      .def_readwrite("certify", &SearchConfig::certify)
      .def_readwrite("target_eps", &SearchConfig::target_eps)
      .def_readwrite("max_cells", &SearchConfig::max_cells)
      .def_readwrite("threads", &SearchConfig::threads);
  py::class_<SearchLog>(m, "SearchLog")
      .def_readonly("coarse_grid", &SearchLog::coarse_grid)
      .def_readonly("linear_bins", &SearchLog::linear_bins)
      .def_readonly("seed_candidates", &SearchLog::seed_candidates)
      .def_readonly("cells_scanned", &SearchLog::cells_scanned)
      .def_readonly("cap_slack", &SearchLog::cap_slack);
  py::class_<SupEstimate>(m, "SupEstimate")
      .def_readonly("value", &SupEstimate::value)
      .def_readonly("argmax", &SupEstimate::argmax)
      .def_readonly("mode", &SupEstimate::mode)
      .def_readonly("certificate_eps", &SupEstimate::certificate_eps)
      .def_readonly("evaluations", &SupEstimate::evaluations)
      .def_readonly("log", &SupEstimate::log);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  m.def("sup_average",
        [](const std::vector<std::complex<double>>& w, int degree, const SearchConfig& cfg) {
          return sup_average(w, degree, cfg);
        },
        py::arg("weights"), py::arg("degree"), py::arg("config") = SearchConfig());
  m.def("sup_average_orbit",
        [](const SystemSpec& spec, const Observable& f, const SystemState& x, int degree,
           std::int64_t n, const SearchConfig& cfg) {
          return sup_average(spec, f, x, degree, n, cfg);
        },
        py::arg("spec"), py::arg("f"), py::arg("x"), py::arg("degree"), py::arg("n"),
        py::arg("config") = SearchConfig());
  m.def("witness_phase_counterexample", &witness_phase_counterexample, py::arg("alpha"),
        py::arg("x"));

  py::class_<EigenRelation>(m, "EigenRelation")
      .def_readonly("eigenvalue", &EigenRelation::eigenvalue)
      .def_readonly("residual", &EigenRelation::residual)
      .def_readonly("accepted", &EigenRelation::accepted);
  py::class_<LevelReport>(m, "LevelReport")
      .def_readonly("claimed", &LevelReport::claimed)
      .def_readonly("detected", &LevelReport::detected)
      .def_readonly("accepted", &LevelReport::accepted)
      .def_readonly("residuals", &LevelReport::residuals)
      .def_readonly("means", &LevelReport::means);
  py::class_<QuasiEigenfunction>(m, "QuasiEigenfunction")
      .def_readonly("level", &QuasiEigenfunction::level)
      .def_readonly("form", &QuasiEigenfunction::form)
      .def_readonly("provenance", &QuasiEigenfunction::provenance);
  py::class_<OrthogonalityReport>(m, "OrthogonalityReport")
      .def_readonly("max_abs", &OrthogonalityReport::max_abs)
      .def_readonly("values", &OrthogonalityReport::values);
  py::class_<GridDomain>(m, "GridDomain")
      .def(py::init([](std::int64_t q, std::vector<std::int64_t> points) {
             GridDomain dom;
             dom.group_order = q;
             dom.points_per_axis = std::move(points);
             dom.validate();
             return dom;
           }),
           py::arg("group_order"), py::arg("points_per_axis"));

  m.def("sample_states", &sample_states, py::arg("spec"), py::arg("count"),
        py::arg("seed") = kDefaultSampleSeed);
  m.def("verify_eigen_relation", &verify_eigen_relation, py::arg("spec"), py::arg("h"),
        py::arg("samples"), py::arg("seed") = kDefaultSampleSeed);
  m.def("verify_quasi_level", &verify_quasi_level, py::arg("spec"), py::arg("f"),
        py::arg("claimed"), py::arg("samples"), py::arg("seed") = kDefaultSampleSeed);
  m.def("catalog_e1_counterexample", &catalog_e1_counterexample, py::arg("alpha"),
        py::arg("m"), py::arg("sign"));
  m.def("catalog_e2_member", &catalog_e2_member, py::arg("alpha"), py::arg("m"),
        py::arg("r"), py::arg("sign"));
  m.def("catalog_e2_family", &catalog_e2_family, py::arg("alpha"), py::arg("window"));
  m.def("skew_e2_characters", &skew_e2_characters, py::arg("dim"), py::arg("window"));
  m.def("orthogonality_report", &orthogonality_report, py::arg("f"), py::arg("family"),
        py::arg("domain"));
  m.def("inner_product",
        [](const Observable& f, const Observable& g, const GridDomain& dom) {
          return inner_product(f, g, dom);
        },
        py::arg("f"), py::arg("g"), py::arg("domain"));
}
