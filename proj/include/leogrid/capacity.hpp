#pragma once

#include <cstdint>
#include <span>

#include "leogrid/metrics.hpp"

namespace leogrid {

/// Free-space link budget driving the Shannon rate of one ISL.
struct LinkModel {
  double tx_power_dBW = 0.0;
  double tx_gain_dBi = 0.0;
  double rx_gain_dBi = 0.0;
  double wavelength_m = 1.55e-6;
  double bandwidth_Hz = 10e9;
  double noise_temp_K = 300.0;
  double efficiency = 1.0;

  static LinkModel defaults();
  void validate() const;
};

/// Shannon rate of a link of the given length; strictly decreasing in length.
double link_capacity_gbps(double length_km, const LinkModel& model);

struct CapacityReport {
  double total_tbps = 0.0;
  double intra_tbps = 0.0;
  double side_tbps = 0.0;
  std::vector<double> per_edge_gbps;  // parallel to snapshot.edges
};

CapacityReport network_capacity(const Snapshot& snapshot, const LinkModel& model);

/// Directed flow network over the subgraph spanned by a path set, with a
/// super source and super sink. Capacities are integer micro-Gbps so the
/// max-flow value is exact.
struct FlowProblem {
  static constexpr std::int64_t kUnlimited = -1;

  struct Arc {
    int from;
    int to;
    std::int64_t capacity_ugbps;  // kUnlimited for super-node arcs
  };

  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<Arc> arcs;
};

FlowProblem build_flow_problem(const Snapshot& snapshot,
                               std::span<const PathResult> paths,
                               const LinkModel& model);

/// Exact maximum source->sink flow in micro-Gbps (Dinic).
std::int64_t max_flow_ugbps(const FlowProblem& problem);

double max_flow_tbps(const FlowProblem& problem);

struct ThroughputPoint {
  int load = 0;  // connection pairs
  double throughput_tbps = 0.0;
};

/// Throughput vs load with nested pair sampling: each level extends the
/// previous level's pair set, so the curve is exactly non-decreasing.
std::vector<ThroughputPoint> throughput_curve(const Snapshot& snapshot,
                                              std::span<const int> loads,
                                              std::uint64_t seed,
                                              const LinkModel& model);

}  // namespace leogrid
