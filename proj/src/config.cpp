#include "pww/config.hpp"

#include <fstream>

namespace pww {

namespace {

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw ConfigError(where + "." + key, "missing required field");
  return j.at(key);
}

double need_number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw ConfigError(where, "expected a number");
  return j.get<double>();
}

std::int64_t need_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ConfigError(where, "expected an integer");
  return j.get<std::int64_t>();
}

bool get_flag(const Json& j, const char* key, bool fallback, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) throw ConfigError(where + "." + key, "expected a boolean");
  return j.at(key).get<bool>();
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw ConfigError(path, e.what());
  }
}

double parse_alpha(const Json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return named_irrational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw ConfigError(where, e.what());
    }
  }
  throw ConfigError(where, "expected a number or a named constant");
}

SystemSpec parse_system(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where, "expected an object");
  const auto type = need(j, "type", where).get<std::string>();
  const bool irrational = get_flag(j, "irrational", true, where);
  try {
    if (type == "rotation") {
      const Json& a = need(j, "alpha", where);
      std::vector<double> alpha;
      if (a.is_array()) {
        for (std::size_t i = 0; i < a.size(); ++i)
          alpha.push_back(parse_alpha(a[i], where + ".alpha[" + std::to_string(i) + "]"));
      } else {
        alpha.push_back(parse_alpha(a, where + ".alpha"));
      }
      return SystemSpec::rotation(std::move(alpha), irrational);
    }
    if (type == "unipotent") {
      const auto dim = need_integer(need(j, "dim", where), where + ".dim");
      return SystemSpec::unipotent_skew(static_cast<int>(dim),
                                        parse_alpha(need(j, "alpha", where), where + ".alpha"),
                                        irrational);
    }
    if (type == "counterexample") {
      return SystemSpec::counterexample(parse_alpha(need(j, "alpha", where), where + ".alpha"),
                                        irrational);
    }
    if (type == "lesigne") {
      SystemSpec base = parse_system(need(j, "base", where), where + ".base");
      TorusPhaseFn gamma;
      const Json& offsets = need(j, "offsets", where);
      if (!offsets.is_array() ||
          offsets.size() != static_cast<std::size_t>(base.group_order()))
        throw ConfigError(where + ".offsets", "need one offset per base fiber");
      for (std::size_t i = 0; i < offsets.size(); ++i)
        gamma.fiber_offset.emplace_back(
            need_number(offsets[i], where + ".offsets[" + std::to_string(i) + "]"));
      const Json& freqs = need(j, "freqs", where);
      if (!freqs.is_array() || freqs.size() != static_cast<std::size_t>(base.dim()))
        throw ConfigError(where + ".freqs", "need one frequency per base coordinate");
      for (std::size_t i = 0; i < freqs.size(); ++i)
        gamma.freqs.push_back(need_integer(freqs[i], where + ".freqs[" + std::to_string(i) + "]"));
      const double b = need_number(need(j, "b", where), where + ".b");
      const auto depth = need_integer(need(j, "depth", where), where + ".depth");
      return SystemSpec::lesigne_extension(std::move(base), std::move(gamma), b,
                                           static_cast<int>(depth));
    }
    if (type == "power") {
      SystemSpec base = parse_system(need(j, "base", where), where + ".base");
      const auto m = need_integer(need(j, "m", where), where + ".m");
      return SystemSpec::power(std::move(base), m);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(where, e.what());
  }
  throw ConfigError(where + ".type", "unknown system type '" + type + "'");
}

Observable parse_observable(const Json& j, const SystemSpec& spec, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where, "expected an object");
  const auto type = need(j, "type", where).get<std::string>();
  const auto q = spec.group_order();
  const int d = spec.dim();
  try {
    if (type == "character") {
      const Json& fj = need(j, "freqs", where);
      if (!fj.is_array() || fj.size() != static_cast<std::size_t>(d))
        throw ConfigError(where + ".freqs", "need one frequency per coordinate");
      std::vector<std::int64_t> freqs;
      for (std::size_t i = 0; i < fj.size(); ++i)
        freqs.push_back(need_integer(fj[i], where + ".freqs[" + std::to_string(i) + "]"));
      std::int64_t group_freq = 0;
      if (j.contains("group_freq"))
        group_freq = need_integer(j.at("group_freq"), where + ".group_freq");
      return Observable::character(q, d, std::move(freqs), group_freq);
    }
    if (type == "constant") {
      const double re = j.contains("re") ? need_number(j.at("re"), where + ".re") : 1.0;
      const double im = j.contains("im") ? need_number(j.at("im"), where + ".im") : 0.0;
      return Observable::constant(q, d, {re, im});
    }
    if (type == "parity") return Observable::parity(q, d);
    if (type == "fiber_weighted") {
      const Json& cj = need(j, "coeffs", where);
      if (!cj.is_array() || cj.size() != static_cast<std::size_t>(q))
        throw ConfigError(where + ".coeffs", "need one [re, im] pair per fiber");
      std::vector<std::complex<double>> coeffs;
      for (std::size_t i = 0; i < cj.size(); ++i) {
        const std::string at = where + ".coeffs[" + std::to_string(i) + "]";
        if (!cj[i].is_array() || cj[i].size() != 2) throw ConfigError(at, "expected [re, im]");
        coeffs.emplace_back(need_number(cj[i][0], at), need_number(cj[i][1], at));
      }
      const Json& fj = need(j, "freqs", where);
      if (!fj.is_array() || fj.size() != static_cast<std::size_t>(d))
        throw ConfigError(where + ".freqs", "need one frequency per coordinate");
      std::vector<std::int64_t> freqs;
      for (std::size_t i = 0; i < fj.size(); ++i)
        freqs.push_back(need_integer(fj[i], where + ".freqs[" + std::to_string(i) + "]"));
      return Observable::fiber_weighted(q, d, std::move(coeffs), std::move(freqs));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(where, e.what());
  }
  throw ConfigError(where + ".type", "unknown observable type '" + type + "'");
}

SystemState parse_state(const Json& j, const SystemSpec& spec, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where, "expected an object");
  SystemState x;
  x.group_index = 0;
  if (j.contains("group")) x.group_index = need_integer(j.at("group"), where + ".group");
  const Json& cj = need(j, "coords", where);
  if (!cj.is_array() || cj.size() != static_cast<std::size_t>(spec.dim()))
    throw ConfigError(where + ".coords", "need one coordinate per torus axis");
  for (std::size_t i = 0; i < cj.size(); ++i)
    x.coords.emplace_back(need_number(cj[i], where + ".coords[" + std::to_string(i) + "]"));
  try {
    spec.check_state(x);
  } catch (const std::exception& e) {
    throw ConfigError(where, e.what());
  }
  return x;
}

PolynomialPhase parse_phase(const Json& j, const SystemSpec& spec, const SystemState& start,
                            const std::string& where) {
  if (!j.is_object()) throw ConfigError(where, "expected an object");
  if (get_flag(j, "witness", false, where)) {
    const auto* node = std::get_if<Counterexample>(&spec.node());
    if (node == nullptr)
      throw ConfigError(where + ".witness", "witness phase needs the two-fiber system");
    try {
      return witness_phase_counterexample(node->alpha.value(), start);
    } catch (const std::exception& e) {
      throw ConfigError(where + ".witness", e.what());
    }
  }
  const Json& cj = need(j, "coeffs", where);
  if (!cj.is_array() || cj.empty()) throw ConfigError(where + ".coeffs", "expected a nonempty array");
  std::vector<double> coeffs;
  for (std::size_t i = 0; i < cj.size(); ++i)
    coeffs.push_back(parse_alpha(cj[i], where + ".coeffs[" + std::to_string(i) + "]"));
  try {
    return PolynomialPhase(coeffs);
  } catch (const std::exception& e) {
    throw ConfigError(where + ".coeffs", e.what());
  }
}

SearchConfig parse_search(const Json& j, const std::string& where) {
  SearchConfig cfg;
  if (j.is_null()) return cfg;
  if (!j.is_object()) throw ConfigError(where, "expected an object");
  if (j.contains("coarse_grid"))
    cfg.coarse_grid = need_integer(j.at("coarse_grid"), where + ".coarse_grid");
  if (j.contains("refinement_rounds"))
    cfg.refinement_rounds =
        static_cast<int>(need_integer(j.at("refinement_rounds"), where + ".refinement_rounds"));
  if (j.contains("multistart"))
    cfg.multistart = static_cast<int>(need_integer(j.at("multistart"), where + ".multistart"));
  cfg.use_linear_transform_scan =
      get_flag(j, "use_linear_transform_scan", cfg.use_linear_transform_scan, where);
  cfg.use_resonance_seeds = get_flag(j, "use_resonance_seeds", cfg.use_resonance_seeds, where);
  cfg.certify = get_flag(j, "certify", cfg.certify, where);
  if (j.contains("target_eps"))
    cfg.target_eps = need_number(j.at("target_eps"), where + ".target_eps");
  if (j.contains("max_cells"))
    cfg.max_cells = need_integer(j.at("max_cells"), where + ".max_cells");
  return cfg;
}

std::vector<std::int64_t> parse_checkpoints(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ConfigError(where, "expected a nonempty array");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(need_integer(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json system_to_json(const SystemSpec& spec) {
  Json j;
  const auto& node = spec.node();
  if (const auto* r = std::get_if<Rotation>(&node)) {
    j["type"] = "rotation";
    Json a = Json::array();
    for (const auto& v : r->alpha) a.push_back(v.value());
    j["alpha"] = std::move(a);
    j["irrational"] = r->irrational;
  } else if (const auto* u = std::get_if<UnipotentSkew>(&node)) {
    j["type"] = "unipotent";
    j["dim"] = u->dim;
    j["alpha"] = u->alpha.value();
    j["irrational"] = u->irrational;
  } else if (const auto* c = std::get_if<Counterexample>(&node)) {
    j["type"] = "counterexample";
    j["alpha"] = c->alpha.value();
    j["irrational"] = c->irrational;
  } else if (const auto* l = std::get_if<LesigneExtension>(&node)) {
    j["type"] = "lesigne";
    j["base"] = system_to_json(*l->base);
    Json offsets = Json::array();
    for (const auto& v : l->gamma.fiber_offset) offsets.push_back(v.value());
    j["offsets"] = std::move(offsets);
    j["freqs"] = l->gamma.freqs;
    j["b"] = l->b.value();
    j["depth"] = l->depth;
  } else if (const auto* p = std::get_if<PowerOf>(&node)) {
    j["type"] = "power";
    j["base"] = system_to_json(*p->base);
    j["m"] = p->m;
  }
  return j;
}

Json observable_to_json(const Observable& f) {
  Json j;
  j["type"] = "terms";
  j["group_order"] = f.group_order();
  j["dim"] = f.dim();
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    Json tj;
    Json coeff = Json::array();
    for (const auto& c : t.coeff) coeff.push_back(Json::array({c.real(), c.imag()}));
    tj["coeff"] = std::move(coeff);
    tj["freqs"] = t.freqs;
    terms.push_back(std::move(tj));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json state_to_json(const SystemState& x) {
  Json j;
  j["group"] = x.group_index;
  Json coords = Json::array();
  for (const auto& c : x.coords) coords.push_back(c.value());
  j["coords"] = std::move(coords);
  return j;
}

Json phase_to_json(const PolynomialPhase& p) {
  Json j;
  j["coeffs"] = p.coeffs();
  return j;
}

Json search_to_json(const SearchConfig& cfg) {
  Json j;
  j["coarse_grid"] = cfg.coarse_grid;
  j["refinement_rounds"] = cfg.refinement_rounds;
  j["multistart"] = cfg.multistart;
  j["use_linear_transform_scan"] = cfg.use_linear_transform_scan;
  j["use_resonance_seeds"] = cfg.use_resonance_seeds;
  j["certify"] = cfg.certify;
  j["target_eps"] = cfg.target_eps;
  j["max_cells"] = cfg.max_cells;
  return j;
}

Json sup_to_json(const SupEstimate& est) {
  Json j;
  j["value"] = est.value;
  j["argmax"] = est.argmax.coeffs();
  j["mode"] = est.mode;
  j["certificate_eps"] = est.certificate_eps;
  j["evaluations"] = est.evaluations;
  Json log;
  log["coarse_grid"] = est.log.coarse_grid;
  log["linear_bins"] = est.log.linear_bins;
  log["refinement_rounds"] = est.log.refinement_rounds;
  log["multistart"] = est.log.multistart;
  log["seed_candidates"] = est.log.seed_candidates;
  log["cells_scanned"] = est.log.cells_scanned;
  log["cap_slack"] = est.log.cap_slack;
  j["search_log"] = std::move(log);
  return j;
}

}  // namespace pww
