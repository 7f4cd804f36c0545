#pragma once

#include <tuple>
#include <variant>
#include <vector>

#include "leogrid/topology.hpp"

namespace leogrid {

enum class GeoFrame { satellite_altitude, earth_surface };

struct PathResult {
  std::vector<SatId> hops;
  double prop_distance_km = 0.0;  // includes ground legs when requested
  double latency_ms = 0.0;
  double geo_distance_km = 0.0;   // between the endpoint satellites
  double stretch = 1.0;
};

struct GroundStation {
  double lat_deg = 0.0;
  double lon_deg = 0.0;
};

using Terminal = std::variant<SatId, GroundStation>;

struct RoutingConfig {
  bool include_gsl = true;
  double min_elevation_deg = 25.0;
  GeoFrame geodesic_frame = GeoFrame::satellite_altitude;
};

struct NoPathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoCoverageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generic adjacency-list graph used by the Dijkstra core; exposed so the
/// routing and max-flow oracles can run on arbitrary small graphs.
struct WeightedGraph {
  struct Neighbor {
    int node;
    double weight;
  };
  std::vector<std::vector<Neighbor>> adjacency;

  static WeightedGraph undirected(int nodes,
                                  const std::vector<std::tuple<int, int, double>>& edges);
};

/// Shortest path by total weight with deterministic lexicographic
/// tie-breaking on the hop sequence. Returns (distance, node path).
std::pair<double, std::vector<int>> dijkstra(const WeightedGraph& graph, int src,
                                             int dst);

PathResult shortest_path(const Snapshot& snapshot, SatId src, SatId dst,
                         GeoFrame frame = GeoFrame::satellite_altitude);

/// Closest visible satellite above the elevation threshold.
SatId attach_terminal(const Snapshot& snapshot, const GroundStation& ground,
                      double min_elevation_deg = 25.0);

PathResult end_to_end_path(const Snapshot& snapshot, const Terminal& a,
                           const Terminal& b, const RoutingConfig& config = {});

double elevation_deg(const Position3D& ground, const Position3D& sat);

}  // namespace leogrid
