#include "leogrid/routing.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace leogrid {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTieEps = 1e-9;

std::vector<int> path_of(const std::vector<int>& parent, int node) {
  std::vector<int> path;
  for (int cur = node; cur != -1; cur = parent[cur]) path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

WeightedGraph WeightedGraph::undirected(
    int nodes, const std::vector<std::tuple<int, int, double>>& edges) {
  WeightedGraph g;
  g.adjacency.assign(nodes, {});
  for (const auto& [a, b, w] : edges) {
    g.adjacency[a].push_back({b, w});
    g.adjacency[b].push_back({a, w});
  }
  return g;
}

std::pair<double, std::vector<int>> dijkstra(const WeightedGraph& graph, int src,
                                             int dst) {
  const int n = static_cast<int>(graph.adjacency.size());
  std::vector<double> dist(n, kInf);
  std::vector<int> parent(n, -1);
  std::vector<char> settled(n, 0);

  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[src] = 0.0;
  queue.push({0.0, src});

  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    if (u == dst) break;
    for (const auto& nb : graph.adjacency[u]) {
      const double nd = d + nb.weight;
      if (nd < dist[nb.node] - kTieEps) {
        dist[nb.node] = nd;
        parent[nb.node] = u;
        queue.push({nd, nb.node});
      } else if (nd <= dist[nb.node] + kTieEps && parent[nb.node] != u) {
        // Equal cost: keep the lexicographically smaller hop sequence.
        // Both u and the current parent are settled, so their paths are final.
        if (parent[nb.node] == -1) continue;
        if (path_of(parent, u) < path_of(parent, parent[nb.node])) {
          dist[nb.node] = std::min(dist[nb.node], nd);
          parent[nb.node] = u;
          queue.push({dist[nb.node], nb.node});
        }
      }
    }
  }

  if (dist[dst] == kInf) throw NoPathError("dijkstra: destination unreachable");
  return {dist[dst], path_of(parent, dst)};
}

namespace {

double geodesic_in_frame(const Position3D& a, const Position3D& b, GeoFrame frame) {
  const double arc = geodesic_distance(a, b);
  if (frame == GeoFrame::satellite_altitude) return arc;
  const double mean_r = 0.5 * (a.norm() + b.norm());
  return arc * constants::kEarthRadiusKm / mean_r;
}

}  // namespace

PathResult shortest_path(const Snapshot& snapshot, SatId src, SatId dst,
                         GeoFrame frame) {
  const WalkerShell& shell = snapshot.shell;
  if (!shell.contains(src) || !shell.contains(dst)) {
    throw std::invalid_argument("shortest_path: SatId out of range");
  }

  PathResult result;
  if (src == dst) {
    result.hops = {src};
    return result;
  }

  WeightedGraph graph;
  graph.adjacency.reserve(snapshot.adjacency.size());
  for (const auto& nbrs : snapshot.adjacency) {
    std::vector<WeightedGraph::Neighbor> row;
    row.reserve(nbrs.size());
    for (const auto& nb : nbrs) row.push_back({nb.node, nb.length_km});
    graph.adjacency.push_back(std::move(row));
  }

  auto [d, path] = dijkstra(graph, shell.index_of(src), shell.index_of(dst));
  result.prop_distance_km = d;
  result.latency_ms = d / constants::kLightSpeedKmS * 1000.0;
  result.hops.reserve(path.size());
  for (int idx : path) result.hops.push_back(shell.sat_at(idx));
  result.geo_distance_km =
      geodesic_in_frame(snapshot.position(src), snapshot.position(dst), frame);
  result.stretch =
      result.geo_distance_km > 0.0 ? d / result.geo_distance_km : 1.0;
  return result;
}

double elevation_deg(const Position3D& ground, const Position3D& sat) {
  const Position3D to_sat = sat - ground;
  const double s = to_sat.norm();
  if (s <= 0.0) return 90.0;
  return rad2deg(std::asin(ground.dot(to_sat) / (ground.norm() * s)));
}

SatId attach_terminal(const Snapshot& snapshot, const GroundStation& ground,
                      double min_elevation_deg) {
  const Position3D gs =
      ground_station_position(ground.lat_deg, ground.lon_deg, snapshot.time_s);
  double best = kInf;
  SatId best_sat{-1, -1};
  for (int idx = 0; idx < snapshot.shell.total_sats; ++idx) {
    const Position3D& pos = snapshot.positions[idx];
    if (elevation_deg(gs, pos) < min_elevation_deg) continue;
    const double d = chord_distance(gs, pos);
    if (d < best) {
      best = d;
      best_sat = snapshot.shell.sat_at(idx);
    }
  }
  if (best_sat.plane < 0) {
    throw NoCoverageError("attach_terminal: no satellite above elevation threshold");
  }
  return best_sat;
}

PathResult end_to_end_path(const Snapshot& snapshot, const Terminal& a,
                           const Terminal& b, const RoutingConfig& config) {
  double ground_legs_km = 0.0;
  auto resolve = [&](const Terminal& t) -> SatId {
    if (const auto* sat = std::get_if<SatId>(&t)) return *sat;
    const auto& gs = std::get<GroundStation>(t);
    const SatId sat = attach_terminal(snapshot, gs, config.min_elevation_deg);
    const Position3D gs_pos =
        ground_station_position(gs.lat_deg, gs.lon_deg, snapshot.time_s);
    ground_legs_km += chord_distance(gs_pos, snapshot.position(sat));
    return sat;
  };

  const SatId src = resolve(a);
  const SatId dst = resolve(b);
  PathResult result = shortest_path(snapshot, src, dst, config.geodesic_frame);
  if (config.include_gsl) {
    result.prop_distance_km += ground_legs_km;
    result.latency_ms =
        result.prop_distance_km / constants::kLightSpeedKmS * 1000.0;
  }
  return result;
}

}  // namespace leogrid
