#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "leogrid/capacity.hpp"

namespace leogrid {

inline constexpr const char* kToolVersion = "leogrid 0.1.0";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NamedStation {
  std::string name;
  double lat_deg = 0.0;
  double lon_deg = 0.0;
};

/// One experiment sweep: shells x phase factors x patterns, with the
/// metric pipelines to run on each cell. Every default is echoed into the
/// manifest so a run is fully described by its output directory.
struct ScenarioConfig {
  std::vector<int> densities = {20};
  std::vector<int> phase_factors = {0};
  bool sweep_phase_factors = false;  // overrides phase_factors with [0, P-1]
  double inclination_deg = 53.0;
  double altitude_km = 550.0;
  std::vector<std::string> patterns;

  double time_step_s = 60.0;
  int time_count = 0;  // 0 = one orbital period at step_s

  std::size_t pair_count = 1000;
  std::uint64_t seed = 42;

  std::vector<NamedStation> ground_stations;
  LinkModel link_model = LinkModel::defaults();

  bool seam = true;
  bool include_gsl = true;
  GeoFrame geodesic_frame = GeoFrame::satellite_altitude;

  // Enabled pipelines: direction, survey, capacity, throughput, gs_latency.
  std::vector<std::string> metrics;
  std::vector<int> throughput_loads;

  std::string output_dir = "out";
  bool dump_topology = false;

  void validate() const;  // throws ConfigError with a field path
  std::string to_json() const;
  static ScenarioConfig from_json_text(const std::string& text);
  static ScenarioConfig from_file(const std::string& path);
};

struct RunManifest {
  std::string config_hash;
  std::uint64_t seed = 0;
  std::string tool_version;
  std::map<std::string, std::string> file_checksums;  // filename -> fnv64 hex
};

/// Shell for the paper's n^2 density notation: n planes of n satellites.
WalkerShell density_shell(int side, int phase_factor = 0,
                          double inclination_deg = 53.0,
                          double altitude_km = 550.0);

ScenarioConfig preset(const std::string& name);
const std::vector<std::string>& preset_names();

RunManifest run_scenario(const ScenarioConfig& config);

std::uint64_t fnv1a64(const std::string& data);

}  // namespace leogrid
