#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leogrid/scenario.hpp"

namespace py = pybind11;
using namespace leogrid;

PYBIND11_MODULE(_core, m) {
  m.doc() = "LEO constellation ISL spanning-pattern evaluator";

  py::class_<Vec3>(m, "Vec3")
      .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"),
           py::arg("z"))
      .def_readonly("x", &Vec3::x)
      .def_readonly("y", &Vec3::y)
      .def_readonly("z", &Vec3::z)
      .def("norm", &Vec3::norm);

  py::class_<SatId>(m, "SatId")
      .def(py::init<int, int>(), py::arg("plane"), py::arg("slot"))
      .def_readonly("plane", &SatId::plane)
      .def_readonly("slot", &SatId::slot)
      .def("__repr__", [](const SatId& s) {
        return "SatId(" + std::to_string(s.plane) + ", " +
               std::to_string(s.slot) + ")";
      });

  py::class_<WalkerShell>(m, "WalkerShell")
      .def(py::init(&WalkerShell::make), py::arg("total_sats"),
           py::arg("planes"), py::arg("phase_factor"),
           py::arg("inclination_deg") = 53.0, py::arg("altitude_km") = 550.0)
      .def_readonly("total_sats", &WalkerShell::total_sats)
      .def_readonly("planes", &WalkerShell::planes)
      .def_readonly("phase_factor", &WalkerShell::phase_factor)
      .def_readonly("inclination_deg", &WalkerShell::inclination_deg)
      .def_readonly("altitude_km", &WalkerShell::altitude_km)
      .def_property_readonly("sats_per_plane", &WalkerShell::sats_per_plane)
      .def("orbital_period_s", &WalkerShell::orbital_period_s);

  py::class_<BiasSet>(m, "BiasSet")
      .def_static("make", &BiasSet::make, py::arg("biases"))
      .def_property_readonly("biases", &BiasSet::biases)
      .def_property_readonly("is_plus_grid", &BiasSet::is_plus_grid);

  py::enum_<LinkKind>(m, "LinkKind")
      .value("intra", LinkKind::intra)
      .value("side", LinkKind::side);

  py::class_<Edge>(m, "Edge")
      .def_readonly("a", &Edge::a)
      .def_readonly("b", &Edge::b)
      .def_readonly("kind", &Edge::kind)
      .def_readonly("length_km", &Edge::length_km);

  py::class_<Snapshot>(m, "Snapshot")
      .def_readonly("time_s", &Snapshot::time_s)
      .def_readonly("shell", &Snapshot::shell)
      .def_readonly("edges", &Snapshot::edges)
      .def("position", &Snapshot::position, py::arg("sat"));

  py::class_<PathResult>(m, "PathResult")
      .def_readonly("hops", &PathResult::hops)
      .def_readonly("prop_distance_km", &PathResult::prop_distance_km)
      .def_readonly("latency_ms", &PathResult::latency_ms)
      .def_readonly("geo_distance_km", &PathResult::geo_distance_km)
      .def_readonly("stretch", &PathResult::stretch);

  py::class_<LinkModel>(m, "LinkModel")
      .def(py::init<>())
      .def_static("defaults", &LinkModel::defaults)
      .def_readwrite("tx_power_dBW", &LinkModel::tx_power_dBW)
      .def_readwrite("tx_gain_dBi", &LinkModel::tx_gain_dBi)
      .def_readwrite("rx_gain_dBi", &LinkModel::rx_gain_dBi)
      .def_readwrite("wavelength_m", &LinkModel::wavelength_m)
      .def_readwrite("bandwidth_Hz", &LinkModel::bandwidth_Hz)
      .def_readwrite("noise_temp_K", &LinkModel::noise_temp_K)
      .def_readwrite("efficiency", &LinkModel::efficiency);

  py::class_<CapacityReport>(m, "CapacityReport")
      .def_readonly("total_tbps", &CapacityReport::total_tbps)
      .def_readonly("intra_tbps", &CapacityReport::intra_tbps)
      .def_readonly("side_tbps", &CapacityReport::side_tbps);

  py::class_<ThroughputPoint>(m, "ThroughputPoint")
      .def_readonly("load", &ThroughputPoint::load)
      .def_readonly("throughput_tbps", &ThroughputPoint::throughput_tbps);

  m.def("max_phase_factor", &max_phase_factor, py::arg("planes"));
  m.def("satellite_position", &satellite_position, py::arg("shell"),
        py::arg("sat"), py::arg("t_s"));
  m.def("chord_distance", &chord_distance);
  m.def("geodesic_distance", &geodesic_distance);
  m.def("ground_station_position", &ground_station_position, py::arg("lat_deg"),
        py::arg("lon_deg"), py::arg("t_s"));

  m.def("pattern_from_name",
        [](const std::string& name) { return pattern_from_name(name); },
        py::arg("name"));
  m.def("all_pattern_names", &all_pattern_names);
  m.def("build_snapshot", &build_snapshot, py::arg("shell"), py::arg("biases"),
        py::arg("t_s"), py::arg("seam") = true);
  m.def("edge_count", &edge_count, py::arg("shell"), py::arg("biases"),
        py::arg("seam") = true);
  m.def("export_edge_list", &export_edge_list, py::arg("snapshot"));

  py::enum_<GeoFrame>(m, "GeoFrame")
      .value("satellite_altitude", GeoFrame::satellite_altitude)
      .value("earth_surface", GeoFrame::earth_surface);

  m.def("shortest_path", &shortest_path, py::arg("snapshot"), py::arg("src"),
        py::arg("dst"), py::arg("frame") = GeoFrame::satellite_altitude);

  m.def("link_capacity_gbps", &link_capacity_gbps, py::arg("length_km"),
        py::arg("model"));
  m.def("network_capacity", &network_capacity, py::arg("snapshot"),
        py::arg("model"));
  m.def(
      "throughput_curve",
      [](const Snapshot& snap, const std::vector<int>& loads,
         std::uint64_t seed, const LinkModel& model) {
        return throughput_curve(snap, loads, seed, model);
      },
      py::arg("snapshot"), py::arg("loads"), py::arg("seed"), py::arg("model"));

  m.def("density_shell", &density_shell, py::arg("side"),
        py::arg("phase_factor") = 0, py::arg("inclination_deg") = 53.0,
        py::arg("altitude_km") = 550.0);
  m.def("preset_names", [] { return preset_names(); });
  m.def(
      "run_preset",
      [](const std::string& name, const std::string& out_dir,
         std::uint64_t seed) {
        ScenarioConfig cfg = preset(name);
        cfg.output_dir = out_dir;
        cfg.seed = seed;
        const RunManifest manifest = run_scenario(cfg);
        py::dict out;
        out["config_hash"] = manifest.config_hash;
        out["files"] = manifest.file_checksums;
        return out;
      },
      py::arg("name"), py::arg("out_dir"), py::arg("seed") = 42);
}
