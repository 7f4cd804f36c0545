#include <random>

#include "doctest.h"
#include "leogrid/capacity.hpp"

using namespace leogrid;

namespace {

const WalkerShell kShell = WalkerShell::make(400, 20, 0, 53.0, 550.0);

// Independent linear-domain link budget (the implementation works in dB).
double budget_oracle_gbps(double length_km, const LinkModel& m) {
  const double d = length_km * 1000.0;
  const double eirp_w = std::pow(10.0, m.tx_power_dBW / 10.0) *
                        std::pow(10.0, m.tx_gain_dBi / 10.0);
  const double path_gain =
      std::pow(m.wavelength_m / (4.0 * constants::kPi * d), 2.0);
  const double rx_w = eirp_w * path_gain * std::pow(10.0, m.rx_gain_dBi / 10.0);
  const double noise_w = constants::kBoltzmann * m.noise_temp_K * m.bandwidth_Hz;
  return m.efficiency * m.bandwidth_Hz * std::log2(1.0 + rx_w / noise_w) / 1e9;
}

// Brute-force min cut: minimum over all source/sink-separating node subsets.
std::int64_t brute_force_min_cut(const FlowProblem& problem,
                                 std::int64_t unlimited) {
  const int n = problem.node_count;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (!(mask & (1 << problem.source)) || (mask & (1 << problem.sink))) {
      continue;
    }
    std::int64_t cut = 0;
    for (const auto& arc : problem.arcs) {
      if ((mask & (1 << arc.from)) && !(mask & (1 << arc.to))) {
        cut += arc.capacity_ugbps == FlowProblem::kUnlimited ? unlimited
                                                             : arc.capacity_ugbps;
      }
    }
    best = std::min(best, cut);
  }
  return best;
}

}  // namespace

TEST_CASE("link capacity is monotone decreasing and obeys the inverse square") {
  const LinkModel model = LinkModel::defaults();
  double prev = link_capacity_gbps(100.0, model);
  for (double d = 200.0; d <= 6000.0; d += 200.0) {
    const double rate = link_capacity_gbps(d, model);
    CHECK(rate < prev);
    prev = rate;
  }
  // Doubling distance costs exactly 6.02 dB of SNR: recover SNR from the
  // rate and compare the linear ratio against 4.
  auto snr_of = [&](double d) {
    const double rate = link_capacity_gbps(d, model);
    return std::pow(2.0, rate * 1e9 / (model.efficiency * model.bandwidth_Hz)) -
           1.0;
  };
  CHECK(snr_of(1000.0) / snr_of(2000.0) == doctest::Approx(4.0).epsilon(1e-9));

  CHECK_THROWS_AS(link_capacity_gbps(0.0, model), std::invalid_argument);
  CHECK_THROWS_AS(link_capacity_gbps(-5.0, model), std::invalid_argument);
}

TEST_CASE("link capacity matches an independent budget computation") {
  const LinkModel model = LinkModel::defaults();
  for (double d : {300.0, 1000.0, 2500.0, 5000.0}) {
    CHECK(link_capacity_gbps(d, model) ==
          doctest::Approx(budget_oracle_gbps(d, model)).epsilon(1e-9));
  }
}

TEST_CASE("network capacity sums edge rates") {
  const LinkModel model = LinkModel::defaults();
  const Snapshot snap = build_snapshot(kShell, pattern_from_name("b0m1"), 0.0);
  const CapacityReport report = network_capacity(snap, model);
  REQUIRE(report.per_edge_gbps.size() == snap.edges.size());
  double manual = 0.0;
  for (const Edge& e : snap.edges) manual += link_capacity_gbps(e.length_km, model);
  CHECK(report.total_tbps == doctest::Approx(manual / 1000.0).epsilon(1e-12));
  CHECK(report.total_tbps ==
        doctest::Approx(report.intra_tbps + report.side_tbps));
  CHECK(report.intra_tbps > 0.0);
  CHECK(report.side_tbps > 0.0);
}

TEST_CASE("flow problem construction") {
  const LinkModel model = LinkModel::defaults();
  const Snapshot snap = build_snapshot(kShell, pattern_from_name("b0"), 0.0);

  SUBCASE("empty path set rejected") {
    CHECK_THROWS_AS(build_flow_problem(snap, {}, model), std::invalid_argument);
  }
  SUBCASE("one single-edge path") {
    const PathResult path = shortest_path(snap, {0, 0}, {0, 1});
    const FlowProblem problem = build_flow_problem(snap, {{path}}, model);
    CHECK(problem.node_count == 8);  // 2 split satellites + edge gadget + super nodes
    CHECK(problem.arcs.size() == 9);  // 2 internal, 5 gadget, src, dst
    const double bottleneck =
        link_capacity_gbps(path.prop_distance_km, model) / 1000.0;
    CHECK(max_flow_tbps(problem) == doctest::Approx(bottleneck).epsilon(1e-6));
  }
  SUBCASE("shared edges are not double counted") {
    const PathResult p1 = shortest_path(snap, {0, 0}, {0, 2});
    const PathResult p2 = shortest_path(snap, {0, 1}, {0, 3});
    const FlowProblem problem = build_flow_problem(snap, {{p1, p2}}, model);
    std::size_t finite_arcs = 0;
    for (const auto& arc : problem.arcs) {
      if (arc.capacity_ugbps != FlowProblem::kUnlimited) ++finite_arcs;
    }
    // Edges 0-1, 1-2, 2-3 appear once each as a gadget capacity arc.
    CHECK(finite_arcs == 3);
  }
}

TEST_CASE("max flow basics") {
  SUBCASE("two arc-disjoint paths superpose") {
    FlowProblem problem;
    problem.node_count = 4;
    problem.source = 2;
    problem.sink = 3;
    problem.arcs = {{2, 0, FlowProblem::kUnlimited},
                    {2, 1, FlowProblem::kUnlimited},
                    {0, 3, 700},
                    {1, 3, 300}};
    CHECK(max_flow_ugbps(problem) == 1000);
  }
  SUBCASE("bottleneck in series") {
    FlowProblem problem;
    problem.node_count = 4;
    problem.source = 0;
    problem.sink = 3;
    problem.arcs = {{0, 1, 500}, {1, 2, 200}, {2, 3, 900}};
    CHECK(max_flow_ugbps(problem) == 200);
  }
}

TEST_CASE("max flow equals brute-force min cut on random problems") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> size(3, 8);
  std::uniform_int_distribution<std::int64_t> cap(1, 50);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int round = 0; round < 80; ++round) {
    FlowProblem problem;
    problem.node_count = size(rng);
    problem.source = 0;
    problem.sink = problem.node_count - 1;
    std::int64_t finite_sum = 0;
    for (int a = 0; a < problem.node_count; ++a) {
      for (int b = 0; b < problem.node_count; ++b) {
        if (a != b && coin(rng) < 0.4) {
          const std::int64_t c = cap(rng);
          problem.arcs.push_back({a, b, c});
          finite_sum += c;
        }
      }
    }
    CHECK(max_flow_ugbps(problem) ==
          brute_force_min_cut(problem, finite_sum + 1));
  }
}

TEST_CASE("throughput curve is non-decreasing and capped by capacity") {
  const LinkModel model = LinkModel::defaults();
  const Snapshot snap = build_snapshot(kShell, pattern_from_name("b0m1"), 0.0);
  const std::vector<int> loads = {1, 5, 20, 50, 100};
  const auto curve = throughput_curve(snap, loads, 42, model);
  REQUIRE(curve.size() == loads.size());
  const double cap = network_capacity(snap, model).total_tbps;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    CHECK(curve[i].throughput_tbps <= cap + 1e-9);
    if (i > 0) {
      CHECK(curve[i].throughput_tbps >= curve[i - 1].throughput_tbps - 1e-12);
    }
  }
  // Load 1: throughput equals the single path's bottleneck link.
  const auto pairs = sample_pairs(kShell, 1, 42);
  const PathResult path = shortest_path(snap, pairs[0].a, pairs[0].b);
  double bottleneck = std::numeric_limits<double>::infinity();
  for (std::size_t h = 1; h < path.hops.size(); ++h) {
    const double len = chord_distance(snap.position(path.hops[h - 1]),
                                      snap.position(path.hops[h]));
    bottleneck = std::min(bottleneck, link_capacity_gbps(len, model));
  }
  CHECK(curve[0].throughput_tbps ==
        doctest::Approx(bottleneck / 1000.0).epsilon(1e-6));

  CHECK_THROWS_AS(throughput_curve(snap, std::vector<int>{5, 5}, 1, model),
                  std::invalid_argument);
}
