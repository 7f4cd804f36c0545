#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "leogrid/scenario.hpp"

using namespace leogrid;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ScenarioConfig tiny_config(const std::string& out_dir) {
  ScenarioConfig cfg;
  cfg.densities = {10};
  cfg.phase_factors = {0};
  cfg.patterns = {"b0"};
  cfg.metrics = {"capacity", "survey"};
  cfg.pair_count = 20;
  cfg.time_count = 1;
  cfg.output_dir = out_dir;
  return cfg;
}

}  // namespace

TEST_CASE("density shell construction") {
  const WalkerShell s20 = density_shell(20);
  CHECK(s20.total_sats == 400);
  CHECK(s20.planes == 20);
  CHECK(s20.sats_per_plane() == 20);
  CHECK(density_shell(3).total_sats == 9);
  CHECK(density_shell(40).total_sats == 1600);
  CHECK_THROWS_AS(density_shell(2), std::invalid_argument);
}

TEST_CASE("presets") {
  const ScenarioConfig fig5 = preset("fig5-capacity");
  CHECK(fig5.patterns.size() == 10);
  CHECK(fig5.sweep_phase_factors);

  const ScenarioConfig fig7 = preset("fig7-density");
  CHECK(fig7.patterns == std::vector<std::string>{"b0m1"});
  CHECK(fig7.densities == std::vector<int>{10, 20, 30, 40});
  CHECK(fig7.phase_factors == std::vector<int>{0});

  const ScenarioConfig fig3 = preset("fig3");
  CHECK(fig3.patterns.size() == 4);
  CHECK(fig3.ground_stations.size() == 2);

  CHECK_THROWS_AS(preset("nonsense"), ConfigError);
}

TEST_CASE("config validation reports the field") {
  ScenarioConfig cfg = tiny_config("unused");
  cfg.patterns.clear();
  CHECK_THROWS_WITH_AS(cfg.validate(), "patterns: must not be empty",
                       ConfigError);

  cfg = tiny_config("unused");
  cfg.metrics = {"bogus"};
  CHECK_THROWS_AS(cfg.validate(), ConfigError);

  cfg = tiny_config("unused");
  cfg.phase_factors = {15};  // exceeds P-1 for density 10
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("config json round trip") {
  ScenarioConfig cfg = tiny_config("roundtrip");
  cfg.seed = 1234;
  cfg.ground_stations = {{"a", 1.0, 2.0}, {"b", 3.0, 4.0}};
  const ScenarioConfig parsed = ScenarioConfig::from_json_text(cfg.to_json());
  CHECK(parsed.densities == cfg.densities);
  CHECK(parsed.patterns == cfg.patterns);
  CHECK(parsed.seed == 1234);
  CHECK(parsed.ground_stations.size() == 2);
  CHECK(parsed.to_json() == cfg.to_json());

  CHECK_THROWS_AS(ScenarioConfig::from_json_text("{not json"), ConfigError);
}

TEST_CASE("run_scenario writes deterministic outputs with a manifest") {
  const fs::path base = fs::temp_directory_path() / "leogrid_test";
  fs::remove_all(base);
  const RunManifest first = run_scenario(tiny_config((base / "a").string()));
  const RunManifest second = run_scenario(tiny_config((base / "b").string()));

  CHECK(first.config_hash.size() == 16);
  CHECK(!first.file_checksums.empty());
  CHECK(first.file_checksums == second.file_checksums);

  // Manifest integrity: every listed file exists and hashes to its entry.
  for (const auto& [name, checksum] : first.file_checksums) {
    const std::string content = slurp(base / "a" / name);
    char expected[20];
    std::snprintf(expected, sizeof(expected), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(content)));
    CHECK(checksum == expected);
  }
  // Byte-identical outputs across the two runs.
  for (const auto& [name, checksum] : first.file_checksums) {
    CHECK(slurp(base / "a" / name) == slurp(base / "b" / name));
  }
  CHECK(fs::exists(base / "a" / "manifest.json"));
  fs::remove_all(base);
}

TEST_CASE("survey summary row count matches the sweep size") {
  const fs::path base = fs::temp_directory_path() / "leogrid_sweep";
  fs::remove_all(base);
  ScenarioConfig cfg = tiny_config((base).string());
  cfg.patterns = {"b0", "bm1"};
  cfg.phase_factors = {0, 3};
  cfg.metrics = {"survey"};
  run_scenario(cfg);
  const std::string summary = slurp(base / "survey_summary.csv");
  const long rows = std::count(summary.begin(), summary.end(), '\n') - 1;
  CHECK(rows == 2 * 2 * 1);  // patterns x F values x densities
  fs::remove_all(base);
}

TEST_CASE("topology dump honors the documented format") {
  const fs::path base = fs::temp_directory_path() / "leogrid_dump";
  fs::remove_all(base);
  ScenarioConfig cfg = tiny_config(base.string());
  cfg.metrics = {"capacity"};
  cfg.dump_topology = true;
  run_scenario(cfg);
  const std::string dump = slurp(base / "topology_d10_F0_b0.edges");
  CHECK(dump.rfind("# 100 10 0", 0) == 0);
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 201);  // header + edges
  fs::remove_all(base);
}
