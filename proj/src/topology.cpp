#include "leogrid/topology.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>

namespace leogrid {

BiasSet BiasSet::make(std::vector<int> biases) {
  std::sort(biases.begin(), biases.end(), std::greater<>());
  biases.erase(std::unique(biases.begin(), biases.end()), biases.end());
  if (biases.empty() || biases.size() > 2) {
    throw std::invalid_argument("BiasSet: need one or two biases");
  }
  for (int b : biases) {
    if (b < -2 || b > 1) {
      throw std::invalid_argument("BiasSet: biases must lie in {-2,-1,0,1}");
    }
  }
  BiasSet out;
  out.biases_ = std::move(biases);
  return out;
}

namespace {

struct NamedPattern {
  const char* name;
  std::vector<int> biases;
};

const std::array<NamedPattern, 10>& pattern_table() {
  static const std::array<NamedPattern, 10> table = {{
      {"b1", {1}},
      {"b0", {0}},
      {"bm1", {-1}},
      {"bm2", {-2}},
      {"b10", {1, 0}},
      {"b0m1", {0, -1}},
      {"bm1m2", {-1, -2}},
      {"b1m1", {1, -1}},
      {"b1m2", {1, -2}},
      {"b0m2", {0, -2}},
  }};
  return table;
}

}  // namespace

BiasSet pattern_from_name(std::string_view name) {
  for (const auto& entry : pattern_table()) {
    if (name == entry.name) return BiasSet::make(entry.biases);
  }
  throw std::invalid_argument("unknown pattern name: " + std::string(name));
}

std::string pattern_name(const BiasSet& biases) {
  for (const auto& entry : pattern_table()) {
    auto sorted = entry.biases;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted == biases.biases()) return entry.name;
  }
  throw std::invalid_argument("pattern_name: bias set has no name");
}

const std::vector<std::string>& all_pattern_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : pattern_table()) out.emplace_back(entry.name);
    return out;
  }();
  return names;
}

Snapshot build_snapshot(const WalkerShell& shell, const BiasSet& biases,
                        double t_s, bool seam) {
  const int planes = shell.planes;
  const int slots = shell.sats_per_plane();
  if (slots < 3 || planes < 3) {
    throw std::invalid_argument("build_snapshot: need P >= 3 and Q >= 3");
  }

  Snapshot snap;
  snap.time_s = t_s;
  snap.shell = shell;
  snap.positions.resize(shell.total_sats);
  for (int idx = 0; idx < shell.total_sats; ++idx) {
    snap.positions[idx] = satellite_position(shell, shell.sat_at(idx), t_s);
  }

  std::set<std::pair<int, int>> seen;
  auto add_edge = [&](SatId a, SatId b, LinkKind kind) {
    int ia = shell.index_of(a), ib = shell.index_of(b);
    if (ia == ib) return;
    if (ia > ib) std::swap(ia, ib);
    if (!seen.insert({ia, ib}).second) return;
    snap.edges.push_back({shell.sat_at(ia), shell.sat_at(ib), kind,
                          chord_distance(snap.positions[ia], snap.positions[ib])});
  };

  for (int n = 0; n < planes; ++n) {
    for (int f = 0; f < slots; ++f) {
      // Intra-orbit ring.
      add_edge({n, f}, {n, (f + 1) % slots}, LinkKind::intra);
      // Side links toward the next plane; the seam edge picks up the extra
      // F-slot offset accumulated by the Walker phasing over P planes.
      for (int b : biases.biases()) {
        if (n < planes - 1) {
          int slot = ((f + b) % slots + slots) % slots;
          add_edge({n, f}, {n + 1, slot}, LinkKind::side);
        } else if (seam) {
          int slot = ((f + b + shell.phase_factor) % slots + slots) % slots;
          add_edge({n, f}, {0, slot}, LinkKind::side);
        }
      }
    }
  }

  snap.adjacency.assign(shell.total_sats, {});
  for (const Edge& e : snap.edges) {
    int ia = shell.index_of(e.a), ib = shell.index_of(e.b);
    snap.adjacency[ia].push_back({ib, e.length_km});
    snap.adjacency[ib].push_back({ia, e.length_km});
  }
  for (auto& nbrs : snap.adjacency) {
    std::sort(nbrs.begin(), nbrs.end(),
              [](const auto& x, const auto& y) { return x.node < y.node; });
  }
  return snap;
}

std::pair<long, long> edge_count(const WalkerShell& shell, const BiasSet& biases,
                                 bool seam) {
  if (shell.sats_per_plane() < 3 || shell.planes < 3) {
    throw std::invalid_argument("edge_count: need P >= 3 and Q >= 3");
  }
  const long total = shell.total_sats;
  const long side = seam ? biases.size() * total
                         : static_cast<long>(biases.size()) *
                               shell.sats_per_plane() * (shell.planes - 1);
  return {total, side};
}

std::string export_edge_list(const Snapshot& snapshot) {
  std::string out;
  char line[128];
  const WalkerShell& s = snapshot.shell;
  std::snprintf(line, sizeof(line), "# %d %d %d %.6f %.6f %.6f\n", s.total_sats,
                s.planes, s.phase_factor, s.inclination_deg, s.altitude_km,
                snapshot.time_s);
  out += line;
  for (const Edge& e : snapshot.edges) {
    std::snprintf(line, sizeof(line), "%d,%d,%d,%d,%s,%.6f\n", e.a.plane,
                  e.a.slot, e.b.plane, e.b.slot,
                  e.kind == LinkKind::intra ? "iISL" : "sISL", e.length_km);
    out += line;
  }
  return out;
}

bool is_connected(const Snapshot& snapshot) {
  const int n = static_cast<int>(snapshot.adjacency.size());
  if (n == 0) return true;
  std::vector<char> visited(n, 0);
  std::vector<int> stack = {0};
  visited[0] = 1;
  int seen = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& nb : snapshot.adjacency[u]) {
      if (!visited[nb.node]) {
        visited[nb.node] = 1;
        ++seen;
        stack.push_back(nb.node);
      }
    }
  }
  return seen == n;
}

}  // namespace leogrid
