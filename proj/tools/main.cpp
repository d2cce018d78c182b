#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pww/scenarios.hpp"

namespace {

pww::Json require_config(const std::string& path) {
  if (path.empty()) throw pww::ConfigError("--config", "required for this command");
  return pww::load_json_file(path);
}

std::string joined_names() {
  std::string s;
  for (const auto& n : pww::scenario_names()) {
    if (!s.empty()) s += ", ";
    s += n;
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polynomial twisted ergodic averages on Z_q x T^d"};
  app.require_subcommand(1);
  app.fallthrough(true);

  std::string config_path;
  pww::RunOptions opt;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--out", opt.out_dir, "output directory (default: current)");
  app.add_option("--seed", opt.seed, "rng seed (default 12345)");
  app.add_option("--threads", opt.threads, "worker threads for the phase search (default 1)");
  app.add_option("--budget", opt.budget,
                 "longest orbit or sequence a run may touch (default 1e8)");

  auto* orbit = app.add_subcommand(
      "orbit", "stream an orbit to CSV, cross-checked against the closed form");
  auto* average =
      app.add_subcommand("average", "twisted polynomial average along an orbit");
  auto* uniform_sup = app.add_subcommand(
      "uniform-sup", "sup over polynomial phases of the twisted average");
  auto* scenario = app.add_subcommand(
      "scenario", "named experiment with built-in defaults and pass/fail thresholds");
  auto* vdc = app.add_subcommand("vdc", "van der Corput inequality sweep");
  auto* two_scale =
      app.add_subcommand("two-scale", "double average over blocks of length M");
  auto* spectral = app.add_subcommand(
      "spectral", "eigenfunction relations, quasi-eigenfunction levels, orthogonality");

  std::string scenario_name;
  scenario->add_option("name", scenario_name, "one of: " + joined_names())->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad flags are config errors; --help is not
  }

  try {
    pww::CommandResult result;
    if (*orbit) {
      result = pww::run_orbit(require_config(config_path), opt);
    } else if (*average) {
      result = pww::run_average(require_config(config_path), opt);
    } else if (*uniform_sup) {
      result = pww::run_uniform_sup(require_config(config_path), opt);
    } else if (*vdc) {
      result = pww::run_vdc(require_config(config_path), opt);
    } else if (*two_scale) {
      result = pww::run_two_scale(require_config(config_path), opt);
    } else if (*spectral) {
      result = pww::run_spectral(require_config(config_path), opt);
    } else if (*scenario) {
      const pww::Json overrides =
          config_path.empty() ? pww::Json::object() : pww::load_json_file(config_path);
      result = pww::run_scenario(scenario_name, overrides, opt);
    }
    std::cout << result.summary.dump(2) << "\n";
    return result.pass ? 0 : 1;
  } catch (const pww::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const pww::BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const pww::Json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
