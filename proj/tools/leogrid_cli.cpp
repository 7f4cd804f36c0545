#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leogrid/scenario.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitRuntimeError = 3;

struct RunOptions {
  std::string config_path;
  std::string preset_name;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::vector<std::string> patterns;
  std::vector<int> densities;
  std::string phase_factor;
  bool dump_topology = false;
};

leogrid::ScenarioConfig assemble_config(const RunOptions& opts) {
  using leogrid::ConfigError;
  leogrid::ScenarioConfig config;
  if (!opts.preset_name.empty()) {
    config = leogrid::preset(opts.preset_name);
  } else if (!opts.config_path.empty()) {
    config = leogrid::ScenarioConfig::from_file(opts.config_path);
  } else {
    throw ConfigError("run: need --config or --preset");
  }
  if (!opts.config_path.empty() && !opts.preset_name.empty()) {
    // Preset provides the base; the file overrides it.
    config = leogrid::ScenarioConfig::from_file(opts.config_path);
  }
  if (!opts.out_dir.empty()) config.output_dir = opts.out_dir;
  if (opts.seed_set) config.seed = opts.seed;
  if (!opts.patterns.empty()) config.patterns = opts.patterns;
  if (!opts.densities.empty()) config.densities = opts.densities;
  if (!opts.phase_factor.empty()) {
    if (opts.phase_factor == "sweep") {
      config.sweep_phase_factors = true;
    } else {
      try {
        config.phase_factors = {std::stoi(opts.phase_factor)};
        config.sweep_phase_factors = false;
      } catch (const std::exception&) {
        throw ConfigError("--phase-factor: expected integer or 'sweep'");
      }
    }
  }
  if (opts.dump_topology) config.dump_topology = true;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LEO constellation ISL spanning-pattern evaluator"};
  app.require_subcommand(1);

  RunOptions opts;
  auto* run = app.add_subcommand("run", "Run a scenario sweep");
  run->add_option("--config", opts.config_path, "Scenario config file (JSON)");
  run->add_option("--preset", opts.preset_name, "Named experiment preset");
  run->add_option("--out", opts.out_dir, "Output directory");
  auto* seed_opt = run->add_option("--seed", opts.seed, "Pair-sampling seed");
  run->add_option("--pattern", opts.patterns, "Pattern names (overrides config)");
  run->add_option("--density", opts.densities, "Shell side counts (overrides config)");
  run->add_option("--phase-factor", opts.phase_factor, "Phase factor or 'sweep'");
  run->add_flag("--dump-topology", opts.dump_topology, "Write edge-list dumps");

  auto* list = app.add_subcommand("list-patterns", "List spanning patterns and presets");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Validate a config file");
  validate->add_option("--config", validate_path, "Config file to check")->required();

  CLI11_PARSE(app, argc, argv);
  opts.seed_set = seed_opt->count() > 0;

  try {
    if (list->parsed()) {
      std::cout << "patterns:\n";
      for (const auto& name : leogrid::all_pattern_names()) {
        const auto biases = leogrid::pattern_from_name(name);
        std::cout << "  " << name << "  {";
        for (std::size_t i = 0; i < biases.biases().size(); ++i) {
          std::cout << (i ? "," : "") << biases.biases()[i];
        }
        std::cout << "}  " << (biases.is_plus_grid() ? "+Grid" : "*Grid") << "\n";
      }
      std::cout << "presets:\n";
      for (const auto& name : leogrid::preset_names()) {
        std::cout << "  " << name << "\n";
      }
      return 0;
    }
    if (validate->parsed()) {
      auto config = leogrid::ScenarioConfig::from_file(validate_path);
      config.validate();
      std::cout << "ok\n";
      return 0;
    }
    if (run->parsed()) {
      auto config = assemble_config(opts);
      const auto manifest = leogrid::run_scenario(config);
      std::cout << "wrote " << manifest.file_checksums.size() << " files to "
                << config.output_dir << " (config " << manifest.config_hash
                << ")\n";
      return 0;
    }
  } catch (const leogrid::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return 0;
}
