#include "leogrid/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

namespace leogrid {

LinkModel LinkModel::defaults() {
  // Optical ISL terminal: 1550 nm, 10 GHz of usable bandwidth, telescope
  // gains sized so a 1000 km link runs a few b/s/Hz. Frozen once; absolute
  // Tbps outputs are a property of this model.
  LinkModel model;
  model.tx_power_dBW = 3.0;       // 2 W
  model.tx_gain_dBi = 83.3;
  model.rx_gain_dBi = 83.3;
  model.wavelength_m = 1.55e-6;
  model.bandwidth_Hz = 10e9;
  model.noise_temp_K = 1000.0;
  model.efficiency = 0.5;
  return model;
}

void LinkModel::validate() const {
  if (wavelength_m <= 0.0 || bandwidth_Hz <= 0.0 || noise_temp_K <= 0.0) {
    throw std::invalid_argument("LinkModel: physical parameters must be positive");
  }
  if (efficiency <= 0.0 || efficiency > 1.0) {
    throw std::invalid_argument("LinkModel: efficiency must be in (0, 1]");
  }
}

double link_capacity_gbps(double length_km, const LinkModel& model) {
  if (length_km <= 0.0) {
    throw std::invalid_argument("link_capacity_gbps: length must be positive");
  }
  model.validate();
  const double d_m = length_km * 1000.0;
  const double fspl_dB =
      20.0 * std::log10(4.0 * constants::kPi * d_m / model.wavelength_m);
  const double rx_power_dBW =
      model.tx_power_dBW + model.tx_gain_dBi + model.rx_gain_dBi - fspl_dB;
  const double noise_dBW = 10.0 * std::log10(constants::kBoltzmann *
                                             model.noise_temp_K *
                                             model.bandwidth_Hz);
  const double snr = std::pow(10.0, (rx_power_dBW - noise_dBW) / 10.0);
  return model.efficiency * model.bandwidth_Hz * std::log2(1.0 + snr) / 1e9;
}

CapacityReport network_capacity(const Snapshot& snapshot, const LinkModel& model) {
  CapacityReport report;
  report.per_edge_gbps.reserve(snapshot.edges.size());
  for (const Edge& e : snapshot.edges) {
    const double rate = link_capacity_gbps(e.length_km, model);
    report.per_edge_gbps.push_back(rate);
    if (e.kind == LinkKind::intra) {
      report.intra_tbps += rate / 1000.0;
    } else {
      report.side_tbps += rate / 1000.0;
    }
  }
  report.total_tbps = report.intra_tbps + report.side_tbps;
  return report;
}

FlowProblem build_flow_problem(const Snapshot& snapshot,
                               std::span<const PathResult> paths,
                               const LinkModel& model) {
  if (paths.empty()) {
    throw std::invalid_argument("build_flow_problem: empty path set");
  }
  const WalkerShell& shell = snapshot.shell;

  std::map<int, int> node_map;  // satellite index -> flow node
  auto node_of = [&](SatId sat) {
    const int idx = shell.index_of(sat);
    auto [it, inserted] = node_map.insert({idx, static_cast<int>(node_map.size())});
    return it->second;
  };

  std::map<std::pair<int, int>, double> spanned;  // undirected edge -> length
  std::vector<std::pair<int, int>> super_arcs;    // (src-side, dst-side) nodes
  for (const PathResult& path : paths) {
    if (path.hops.empty()) {
      throw std::invalid_argument("build_flow_problem: empty path");
    }
    for (const SatId& hop : path.hops) {
      if (!shell.contains(hop)) {
        throw std::invalid_argument("build_flow_problem: path leaves the snapshot");
      }
    }
    super_arcs.emplace_back(node_of(path.hops.front()), node_of(path.hops.back()));
    for (std::size_t i = 0; i + 1 < path.hops.size(); ++i) {
      int a = node_of(path.hops[i]);
      int b = node_of(path.hops[i + 1]);
      const double len = chord_distance(snapshot.position(path.hops[i]),
                                        snapshot.position(path.hops[i + 1]));
      if (a > b) std::swap(a, b);
      spanned.insert({{a, b}, len});
    }
  }

  // Each satellite is split into an in-node and an out-node: source
  // attachments enter the out-node and sink attachments leave the in-node,
  // so a satellite serving as both a source and a destination cannot pass
  // flow src -> sink without touching an ISL. Each spanned ISL becomes a
  // two-node gadget whose single internal arc carries the link rate, capping
  // the edge's combined use in both directions at its capacity and keeping
  // the flow value below the network capacity of the spanned subgraph.
  const int sats = static_cast<int>(node_map.size());
  const int spanned_edges = static_cast<int>(spanned.size());
  auto in_node = [](int v) { return 2 * v; };
  auto out_node = [](int v) { return 2 * v + 1; };

  FlowProblem problem;
  problem.node_count = 2 * sats + 2 * spanned_edges + 2;
  problem.source = problem.node_count - 2;
  problem.sink = problem.node_count - 1;
  for (int v = 0; v < sats; ++v) {
    problem.arcs.push_back({in_node(v), out_node(v), FlowProblem::kUnlimited});
  }
  int gadget = 2 * sats;
  for (const auto& [edge, len] : spanned) {
    const auto cap = static_cast<std::int64_t>(
        std::llround(link_capacity_gbps(len, model) * 1e6));
    const int e_in = gadget, e_out = gadget + 1;
    gadget += 2;
    problem.arcs.push_back({out_node(edge.first), e_in, FlowProblem::kUnlimited});
    problem.arcs.push_back({out_node(edge.second), e_in, FlowProblem::kUnlimited});
    problem.arcs.push_back({e_in, e_out, cap});
    problem.arcs.push_back({e_out, in_node(edge.first), FlowProblem::kUnlimited});
    problem.arcs.push_back({e_out, in_node(edge.second), FlowProblem::kUnlimited});
  }
  std::sort(super_arcs.begin(), super_arcs.end());
  super_arcs.erase(std::unique(super_arcs.begin(), super_arcs.end()),
                   super_arcs.end());
  std::vector<char> has_src(sats, 0), has_dst(sats, 0);
  for (const auto& [s, d] : super_arcs) {
    // Duplicate endpoints collapse to a single infinite arc per node.
    if (!has_src[s]) {
      problem.arcs.push_back({problem.source, out_node(s), FlowProblem::kUnlimited});
      has_src[s] = 1;
    }
    if (!has_dst[d]) {
      problem.arcs.push_back({in_node(d), problem.sink, FlowProblem::kUnlimited});
      has_dst[d] = 1;
    }
  }
  return problem;
}

namespace {

// Standard Dinic over an explicit residual arc list.
class Dinic {
 public:
  explicit Dinic(int nodes) : head_(nodes, -1) {}

  void add_arc(int from, int to, std::int64_t cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t run(int source, int sink) {
    std::int64_t total = 0;
    while (build_levels(source, sink)) {
      iter_ = head_;
      while (std::int64_t pushed = augment(
                 source, sink, std::numeric_limits<std::int64_t>::max())) {
        total += pushed;
      }
    }
    return total;
  }

 private:
  struct ResidualArc {
    int to;
    int next;
    std::int64_t residual;
  };

  bool build_levels(int source, int sink) {
    level_.assign(head_.size(), -1);
    std::queue<int> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int i = head_[u]; i != -1; i = arcs_[i].next) {
        if (arcs_[i].residual > 0 && level_[arcs_[i].to] == -1) {
          level_[arcs_[i].to] = level_[u] + 1;
          queue.push(arcs_[i].to);
        }
      }
    }
    return level_[sink] != -1;
  }

  std::int64_t augment(int u, int sink, std::int64_t limit) {
    if (u == sink) return limit;
    for (int& i = iter_[u]; i != -1; i = arcs_[i].next) {
      ResidualArc& arc = arcs_[i];
      if (arc.residual > 0 && level_[arc.to] == level_[u] + 1) {
        const std::int64_t pushed =
            augment(arc.to, sink, std::min(limit, arc.residual));
        if (pushed > 0) {
          arc.residual -= pushed;
          arcs_[i ^ 1].residual += pushed;
          return pushed;
        }
      }
    }
    level_[u] = -1;
    return 0;
  }

  std::vector<int> head_;
  std::vector<int> iter_;
  std::vector<int> level_;
  std::vector<ResidualArc> arcs_;
};

}  // namespace

std::int64_t max_flow_ugbps(const FlowProblem& problem) {
  // Any finite cut is bounded by the total finite capacity, so "unlimited"
  // arcs can use that sum plus one.
  std::int64_t finite_sum = 0;
  for (const auto& arc : problem.arcs) {
    if (arc.capacity_ugbps != FlowProblem::kUnlimited) {
      finite_sum += arc.capacity_ugbps;
    }
  }
  const std::int64_t unlimited = finite_sum + 1;
  Dinic dinic(problem.node_count);
  for (const auto& arc : problem.arcs) {
    dinic.add_arc(arc.from, arc.to,
                  arc.capacity_ugbps == FlowProblem::kUnlimited
                      ? unlimited
                      : arc.capacity_ugbps);
  }
  return dinic.run(problem.source, problem.sink);
}

double max_flow_tbps(const FlowProblem& problem) {
  return static_cast<double>(max_flow_ugbps(problem)) / 1e9;
}

std::vector<ThroughputPoint> throughput_curve(const Snapshot& snapshot,
                                              std::span<const int> loads,
                                              std::uint64_t seed,
                                              const LinkModel& model) {
  if (loads.empty()) return {};
  for (std::size_t i = 0; i < loads.size(); ++i) {
    if (loads[i] <= 0 || (i > 0 && loads[i] <= loads[i - 1])) {
      throw std::invalid_argument("throughput_curve: loads must be positive and increasing");
    }
  }
  const int max_load = loads.back();
  const std::vector<PairSample> pairs =
      sample_pairs(snapshot.shell, static_cast<std::size_t>(max_load), seed);

  std::vector<PathResult> routed;
  routed.reserve(pairs.size());
  std::vector<ThroughputPoint> curve;
  curve.reserve(loads.size());
  for (int load : loads) {
    while (static_cast<int>(routed.size()) < load) {
      const PairSample& p = routed.size() < pairs.size()
                                ? pairs[routed.size()]
                                : pairs.back();
      routed.push_back(shortest_path(snapshot, p.a, p.b));
    }
    const FlowProblem problem = build_flow_problem(
        snapshot, std::span<const PathResult>(routed.data(), load), model);
    curve.push_back({load, max_flow_tbps(problem)});
  }
  return curve;
}

}  // namespace leogrid
