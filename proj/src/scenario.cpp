#include "leogrid/scenario.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace leogrid {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::vector<std::string> kMetricNames = {"direction", "survey", "capacity",
                                               "throughput", "gs_latency"};

std::string frame_name(GeoFrame frame) {
  return frame == GeoFrame::satellite_altitude ? "satellite_altitude"
                                               : "earth_surface";
}

GeoFrame frame_from_name(const std::string& name) {
  if (name == "satellite_altitude") return GeoFrame::satellite_altitude;
  if (name == "earth_surface") return GeoFrame::earth_surface;
  throw ConfigError("toggles.geodesic_frame: unknown frame '" + name + "'");
}

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace

void ScenarioConfig::validate() const {
  if (patterns.empty()) throw ConfigError("patterns: must not be empty");
  for (const auto& p : patterns) pattern_from_name(p);  // throws on bad name
  if (densities.empty()) throw ConfigError("shell.densities: must not be empty");
  for (int n : densities) {
    if (n < 3) throw ConfigError("shell.densities: side count must be >= 3");
  }
  if (!sweep_phase_factors) {
    if (phase_factors.empty()) {
      throw ConfigError("shell.phase_factors: must not be empty");
    }
    for (int f : phase_factors) {
      if (f < 0) throw ConfigError("shell.phase_factors: F must be >= 0");
      for (int n : densities) {
        if (f > n - 1) {
          throw ConfigError("shell.phase_factors: F exceeds P-1 for density " +
                            std::to_string(n));
        }
      }
    }
  }
  if (inclination_deg <= 0.0 || inclination_deg > 180.0) {
    throw ConfigError("shell.inclination_deg: must be in (0, 180]");
  }
  if (altitude_km <= 0.0) throw ConfigError("shell.altitude_km: must be positive");
  if (time_step_s <= 0.0) throw ConfigError("time.step_s: must be positive");
  if (time_count < 0) throw ConfigError("time.count: must be >= 0");
  if (metrics.empty()) throw ConfigError("metrics: must not be empty");
  for (const auto& m : metrics) {
    if (std::find(kMetricNames.begin(), kMetricNames.end(), m) ==
        kMetricNames.end()) {
      throw ConfigError("metrics: unknown metric '" + m + "'");
    }
    if (m == "survey" && pair_count == 0) {
      throw ConfigError("pairs.count: survey needs at least one pair");
    }
    if (m == "throughput" && throughput_loads.empty()) {
      throw ConfigError("throughput_loads: must not be empty for throughput");
    }
    if (m == "gs_latency" && ground_stations.size() < 2) {
      throw ConfigError("ground_stations: gs_latency needs two stations");
    }
  }
  for (std::size_t i = 0; i < throughput_loads.size(); ++i) {
    if (throughput_loads[i] <= 0 ||
        (i > 0 && throughput_loads[i] <= throughput_loads[i - 1])) {
      throw ConfigError("throughput_loads: must be positive and increasing");
    }
  }
  for (const auto& gs : ground_stations) {
    if (gs.lat_deg < -90.0 || gs.lat_deg > 90.0 || gs.lon_deg < -180.0 ||
        gs.lon_deg > 180.0) {
      throw ConfigError("ground_stations." + gs.name + ": coordinates out of range");
    }
  }
  link_model.validate();
  if (output_dir.empty()) throw ConfigError("output_dir: must not be empty");
}

std::string ScenarioConfig::to_json() const {
  json j;
  j["shell"]["densities"] = densities;
  if (sweep_phase_factors) {
    j["shell"]["phase_factors"] = "sweep";
  } else {
    j["shell"]["phase_factors"] = phase_factors;
  }
  j["shell"]["inclination_deg"] = inclination_deg;
  j["shell"]["altitude_km"] = altitude_km;
  j["patterns"] = patterns;
  j["time"]["step_s"] = time_step_s;
  j["time"]["count"] = time_count;
  j["pairs"]["count"] = pair_count;
  j["pairs"]["seed"] = seed;
  j["ground_stations"] = json::array();
  for (const auto& gs : ground_stations) {
    j["ground_stations"].push_back(
        {{"name", gs.name}, {"lat_deg", gs.lat_deg}, {"lon_deg", gs.lon_deg}});
  }
  j["link_model"] = {{"tx_power_dBW", link_model.tx_power_dBW},
                     {"tx_gain_dBi", link_model.tx_gain_dBi},
                     {"rx_gain_dBi", link_model.rx_gain_dBi},
                     {"wavelength_m", link_model.wavelength_m},
                     {"bandwidth_Hz", link_model.bandwidth_Hz},
                     {"noise_temp_K", link_model.noise_temp_K},
                     {"efficiency", link_model.efficiency}};
  j["toggles"] = {{"seam", seam},
                  {"include_gsl", include_gsl},
                  {"geodesic_frame", frame_name(geodesic_frame)}};
  j["metrics"] = metrics;
  j["throughput_loads"] = throughput_loads;
  j["output_dir"] = output_dir;
  j["dump_topology"] = dump_topology;
  return j.dump(2);
}

ScenarioConfig ScenarioConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  ScenarioConfig cfg;
  try {
    if (j.contains("shell")) {
      const auto& shell = j.at("shell");
      if (shell.contains("densities")) {
        cfg.densities = shell.at("densities").get<std::vector<int>>();
      }
      if (shell.contains("phase_factors")) {
        if (shell.at("phase_factors").is_string()) {
          if (shell.at("phase_factors").get<std::string>() != "sweep") {
            throw ConfigError("shell.phase_factors: expected list or \"sweep\"");
          }
          cfg.sweep_phase_factors = true;
        } else {
          cfg.phase_factors = shell.at("phase_factors").get<std::vector<int>>();
        }
      }
      if (shell.contains("inclination_deg")) {
        cfg.inclination_deg = shell.at("inclination_deg").get<double>();
      }
      if (shell.contains("altitude_km")) {
        cfg.altitude_km = shell.at("altitude_km").get<double>();
      }
    }
    if (j.contains("patterns")) {
      cfg.patterns = j.at("patterns").get<std::vector<std::string>>();
    }
    if (j.contains("time")) {
      if (j.at("time").contains("step_s")) {
        cfg.time_step_s = j.at("time").at("step_s").get<double>();
      }
      if (j.at("time").contains("count")) {
        cfg.time_count = j.at("time").at("count").get<int>();
      }
    }
    if (j.contains("pairs")) {
      if (j.at("pairs").contains("count")) {
        cfg.pair_count = j.at("pairs").at("count").get<std::size_t>();
      }
      if (j.at("pairs").contains("seed")) {
        cfg.seed = j.at("pairs").at("seed").get<std::uint64_t>();
      }
    }
    if (j.contains("ground_stations")) {
      cfg.ground_stations.clear();
      for (const auto& gs : j.at("ground_stations")) {
        cfg.ground_stations.push_back({gs.at("name").get<std::string>(),
                                       gs.at("lat_deg").get<double>(),
                                       gs.at("lon_deg").get<double>()});
      }
    }
    if (j.contains("link_model")) {
      const auto& lm = j.at("link_model");
      auto field = [&](const char* key, double& target) {
        if (lm.contains(key)) target = lm.at(key).get<double>();
      };
      field("tx_power_dBW", cfg.link_model.tx_power_dBW);
      field("tx_gain_dBi", cfg.link_model.tx_gain_dBi);
      field("rx_gain_dBi", cfg.link_model.rx_gain_dBi);
      field("wavelength_m", cfg.link_model.wavelength_m);
      field("bandwidth_Hz", cfg.link_model.bandwidth_Hz);
      field("noise_temp_K", cfg.link_model.noise_temp_K);
      field("efficiency", cfg.link_model.efficiency);
    }
    if (j.contains("toggles")) {
      const auto& t = j.at("toggles");
      if (t.contains("seam")) cfg.seam = t.at("seam").get<bool>();
      if (t.contains("include_gsl")) {
        cfg.include_gsl = t.at("include_gsl").get<bool>();
      }
      if (t.contains("geodesic_frame")) {
        cfg.geodesic_frame =
            frame_from_name(t.at("geodesic_frame").get<std::string>());
      }
    }
    if (j.contains("metrics")) {
      cfg.metrics = j.at("metrics").get<std::vector<std::string>>();
    }
    if (j.contains("throughput_loads")) {
      cfg.throughput_loads = j.at("throughput_loads").get<std::vector<int>>();
    }
    if (j.contains("output_dir")) {
      cfg.output_dir = j.at("output_dir").get<std::string>();
    }
    if (j.contains("dump_topology")) {
      cfg.dump_topology = j.at("dump_topology").get<bool>();
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

ScenarioConfig ScenarioConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

WalkerShell density_shell(int side, int phase_factor, double inclination_deg,
                          double altitude_km) {
  if (side < 3) throw std::invalid_argument("density_shell: side must be >= 3");
  return WalkerShell::make(side * side, side, phase_factor, inclination_deg,
                           altitude_km);
}

namespace {

std::vector<NamedStation> harbin_london() {
  return {{"harbin", 45.75, 126.65}, {"london", 51.50, -0.13}};
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "fig3-harbin-london", "fig4-latency-stretch", "fig5-capacity",
      "fig6-throughput",    "fig7-density",         "fig8-density-capacity"};
  return names;
}

ScenarioConfig preset(const std::string& name) {
  ScenarioConfig cfg;
  if (name == "fig3" || name == "fig3-harbin-london") {
    cfg.patterns = {"b1", "b0", "bm1", "bm2"};
    cfg.metrics = {"gs_latency"};
    cfg.ground_stations = harbin_london();
    cfg.time_count = 0;  // one full period
  } else if (name == "fig4" || name == "fig4-latency-stretch") {
    cfg.patterns = all_pattern_names();
    cfg.sweep_phase_factors = true;
    cfg.metrics = {"survey"};
    cfg.pair_count = 300;
    cfg.time_count = 1;
  } else if (name == "fig5" || name == "fig5-capacity") {
    cfg.patterns = all_pattern_names();
    cfg.sweep_phase_factors = true;
    cfg.metrics = {"capacity"};
    cfg.time_count = 1;
  } else if (name == "fig6" || name == "fig6-throughput") {
    cfg.patterns = {"b1", "bm1", "b0m1", "b1m2"};
    cfg.metrics = {"throughput"};
    cfg.throughput_loads = {100, 200, 300, 400, 500, 600, 700, 800, 900, 1000};
    cfg.time_count = 1;
  } else if (name == "fig7" || name == "fig7-density") {
    cfg.patterns = {"b0m1"};
    cfg.densities = {10, 20, 30, 40};
    cfg.metrics = {"survey"};
    cfg.pair_count = 1000;
    cfg.time_count = 1;
  } else if (name == "fig8" || name == "fig8-density-capacity") {
    cfg.patterns = {"b0m1"};
    cfg.densities = {10, 20, 30, 40};
    cfg.metrics = {"capacity", "throughput"};
    cfg.throughput_loads = {200, 400, 600, 800, 1000};
    cfg.time_count = 1;
  } else {
    throw ConfigError("unknown preset: " + name);
  }
  return cfg;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

namespace {

std::string hex64(std::uint64_t value) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

class OutputWriter {
 public:
  explicit OutputWriter(const fs::path& dir) : dir_(dir) {
    fs::create_directories(dir_);
  }

  void write(const std::string& name, const std::string& content) {
    const fs::path path = dir_ / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    out.close();
    written_.push_back(name);
    checksums_[name] = hex64(fnv1a64(content));
  }

  void discard_all() {
    for (const auto& name : written_) {
      std::error_code ec;
      fs::remove(dir_ / name, ec);
    }
    written_.clear();
    checksums_.clear();
  }

  const std::map<std::string, std::string>& checksums() const { return checksums_; }

 private:
  fs::path dir_;
  std::vector<std::string> written_;
  std::map<std::string, std::string> checksums_;
};

std::string cell_tag(int density, int phase_factor, const std::string& pattern) {
  return "d" + std::to_string(density) + "_F" + std::to_string(phase_factor) +
         "_" + pattern;
}

std::string ecdf_csv(const SurveyStats& stats) {
  std::string out = "value,cum_prob\n";
  const double n = static_cast<double>(stats.count);
  for (std::size_t i = 0; i < stats.sorted_samples.size(); ++i) {
    out += fmt(stats.sorted_samples[i]) + "," + fmt((i + 1) / n) + "\n";
  }
  return out;
}

}  // namespace

RunManifest run_scenario(const ScenarioConfig& config) {
  config.validate();
  OutputWriter writer{fs::path(config.output_dir)};
  try {
    std::string survey_csv =
        "density,pattern,F,pairs,timestamps,mean_latency_ms,max_latency_ms,"
        "min_latency_ms,std_latency_ms,mean_stretch,max_stretch,"
        "frac_stretch_lt_1.5\n";
    bool any_survey = false;
    auto enabled = [&](const char* m) {
      return std::find(config.metrics.begin(), config.metrics.end(), m) !=
             config.metrics.end();
    };

    for (int density : config.densities) {
      std::string capacity_csv = "F,pattern,capacity_tbps\n";
      for (int phase_factor :
           config.sweep_phase_factors
               ? [&] {
                   std::vector<int> fs(density);
                   for (int i = 0; i < density; ++i) fs[i] = i;
                   return fs;
                 }()
               : config.phase_factors) {
        const WalkerShell shell = density_shell(
            density, phase_factor, config.inclination_deg, config.altitude_km);
        const int steps =
            config.time_count > 0
                ? config.time_count
                : std::max(1, static_cast<int>(shell.orbital_period_s() /
                                               config.time_step_s));
        const TimeGrid grid = TimeGrid::make(0.0, config.time_step_s, steps);

        for (const std::string& pattern_id : config.patterns) {
          const BiasSet biases = pattern_from_name(pattern_id);
          const std::string tag = cell_tag(density, phase_factor, pattern_id);

          std::vector<Snapshot> snapshots;
          snapshots.reserve(static_cast<std::size_t>(grid.count));
          for (double t : grid.timestamps()) {
            snapshots.push_back(build_snapshot(shell, biases, t, config.seam));
          }

          if (config.dump_topology) {
            writer.write("topology_" + tag + ".edges",
                         export_edge_list(snapshots.front()));
          }

          if (enabled("direction")) {
            const AngleHistogram hist =
                direction_distribution(snapshots, EdgeFilter::all, 1.0);
            const AngleHistogram intra =
                direction_distribution(snapshots, EdgeFilter::intra, 1.0);
            std::string csv = "bin_start,bin_end,density,intra_density\n";
            for (int i = 0; i < hist.bin_count(); ++i) {
              csv += fmt(hist.bin_start(i)) + "," +
                     fmt(hist.bin_start(i) + hist.bin_width_deg) + "," +
                     fmt(hist.density[i]) + "," + fmt(intra.density[i]) + "\n";
            }
            writer.write("direction_" + tag + ".csv", csv);
          }

          if (enabled("survey")) {
            const auto pairs =
                sample_pairs(shell, config.pair_count, config.seed);
            const Survey survey = latency_stretch_survey(
                snapshots, pairs, config.geodesic_frame);
            survey_csv += std::to_string(density) + "," + pattern_id + "," +
                          std::to_string(phase_factor) + "," +
                          std::to_string(pairs.size()) + "," +
                          std::to_string(snapshots.size()) + "," +
                          fmt(survey.latency_ms.mean) + "," +
                          fmt(survey.latency_ms.max) + "," +
                          fmt(survey.latency_ms.min) + "," +
                          fmt(survey.latency_ms.stddev) + "," +
                          fmt(survey.stretch.mean) + "," +
                          fmt(survey.stretch.max) + "," +
                          fmt(survey.stretch.fraction_below(1.5)) + "\n";
            any_survey = true;
            writer.write("ecdf_latency_" + tag + ".csv",
                         ecdf_csv(survey.latency_ms));
            writer.write("ecdf_stretch_" + tag + ".csv",
                         ecdf_csv(survey.stretch));
          }

          if (enabled("capacity")) {
            const CapacityReport report =
                network_capacity(snapshots.front(), config.link_model);
            capacity_csv += std::to_string(phase_factor) + "," + pattern_id +
                            "," + fmt(report.total_tbps) + "\n";
          }

          if (enabled("throughput")) {
            const auto curve =
                throughput_curve(snapshots.front(), config.throughput_loads,
                                 config.seed, config.link_model);
            std::string csv = "load,throughput_tbps\n";
            for (const auto& point : curve) {
              csv += std::to_string(point.load) + "," +
                     fmt(point.throughput_tbps) + "\n";
            }
            writer.write("throughput_" + tag + ".csv", csv);
          }

          if (enabled("gs_latency")) {
            const NamedStation& a = config.ground_stations[0];
            const NamedStation& b = config.ground_stations[1];
            RoutingConfig routing;
            routing.include_gsl = config.include_gsl;
            routing.geodesic_frame = config.geodesic_frame;
            std::string csv = "t_s,latency_ms,prop_distance_km,hop_count\n";
            for (const Snapshot& snap : snapshots) {
              const PathResult path = end_to_end_path(
                  snap, GroundStation{a.lat_deg, a.lon_deg},
                  GroundStation{b.lat_deg, b.lon_deg}, routing);
              csv += fmt(snap.time_s) + "," + fmt(path.latency_ms) + "," +
                     fmt(path.prop_distance_km) + "," +
                     std::to_string(path.hops.size()) + "\n";
            }
            writer.write("gs_latency_" + tag + ".csv", csv);
          }
        }
      }
      if (enabled("capacity")) {
        writer.write("capacity_d" + std::to_string(density) + ".csv",
                     capacity_csv);
      }
    }
    if (any_survey) writer.write("survey_summary.csv", survey_csv);

    RunManifest manifest;
    manifest.seed = config.seed;
    manifest.tool_version = kToolVersion;
    const std::string config_json = config.to_json();
    // The hash identifies the experiment, not where it was written.
    ScenarioConfig hashed = config;
    hashed.output_dir = "-";
    manifest.config_hash = hex64(fnv1a64(hashed.to_json()));
    manifest.file_checksums = writer.checksums();

    json mj;
    mj["tool_version"] = manifest.tool_version;
    mj["seed"] = manifest.seed;
    mj["config_hash"] = manifest.config_hash;
    mj["config"] = json::parse(config_json);
    mj["files"] = manifest.file_checksums;
    writer.write("manifest.json", mj.dump(2) + "\n");
    return manifest;
  } catch (...) {
    // Abort cleanly: a partial output directory is worse than none.
    writer.discard_all();
    throw;
  }
}

}  // namespace leogrid
