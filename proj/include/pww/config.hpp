#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pww/observable.hpp"
#include "pww/phases.hpp"
#include "pww/systems.hpp"
#include "pww/uniformity.hpp"

namespace pww {

// Key order is preserved so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& where, const std::string& what)
      : std::runtime_error("config error at " + where + ": " + what) {}
};

Json load_json_file(const std::string& path);

// number, or one of the named constants ("sqrt2m1", "golden")
double parse_alpha(const Json& j, const std::string& where);

SystemSpec parse_system(const Json& j, const std::string& where);
Observable parse_observable(const Json& j, const SystemSpec& spec, const std::string& where);
SystemState parse_state(const Json& j, const SystemSpec& spec, const std::string& where);

// {"coeffs": [c0, c1, ...]} or {"witness": true}; the witness form needs the
// two-fiber system and a start state on fiber 1.
PolynomialPhase parse_phase(const Json& j, const SystemSpec& spec, const SystemState& start,
                            const std::string& where);

SearchConfig parse_search(const Json& j, const std::string& where);

std::vector<std::int64_t> parse_checkpoints(const Json& j, const std::string& where);

Json system_to_json(const SystemSpec& spec);
Json observable_to_json(const Observable& f);
Json state_to_json(const SystemState& x);
Json phase_to_json(const PolynomialPhase& p);
Json search_to_json(const SearchConfig& cfg);
Json sup_to_json(const SupEstimate& est);

}  // namespace pww
