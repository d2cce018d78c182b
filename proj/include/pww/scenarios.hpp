#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pww/config.hpp"

namespace pww {

struct RunOptions {
  std::string out_dir = ".";
  std::uint64_t seed = 12345;
  int threads = 1;
  std::int64_t budget = 100000000;  // longest orbit / sequence a run may touch
};

struct CommandResult {
  bool pass = true;
  Json summary;
};

CommandResult run_orbit(const Json& cfg, const RunOptions& opt);
CommandResult run_average(const Json& cfg, const RunOptions& opt);
CommandResult run_uniform_sup(const Json& cfg, const RunOptions& opt);
CommandResult run_vdc(const Json& cfg, const RunOptions& opt);
CommandResult run_two_scale(const Json& cfg, const RunOptions& opt);
CommandResult run_spectral(const Json& cfg, const RunOptions& opt);

std::vector<std::string> scenario_names();

// Named experiment with built-in defaults, pass/fail thresholds and a claim
// string in the summary; overrides are merged onto the defaults.
CommandResult run_scenario(const std::string& name, const Json& overrides,
                           const RunOptions& opt);

}  // namespace pww
