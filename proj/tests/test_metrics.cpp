#include <random>

#include "doctest.h"
#include "leogrid/metrics.hpp"

using namespace leogrid;

namespace {
const WalkerShell kShell = WalkerShell::make(400, 20, 0, 53.0, 550.0);
}

TEST_CASE("isl angle basics") {
  CHECK(isl_angle_deg({1, 0, 0}) == doctest::Approx(0.0));
  CHECK(isl_angle_deg({0, 0, 1}) == doctest::Approx(90.0));
  CHECK(isl_angle_deg({1, 0, 1}) == doctest::Approx(45.0));
  CHECK(isl_angle_deg({0, 0, -2}) == doctest::Approx(-90.0));
  CHECK_THROWS_AS(isl_angle_deg({0, 0, 0}), std::invalid_argument);
}

TEST_CASE("angle is antisymmetric in the edge orientation") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const Vec3 v{unit(rng), unit(rng), unit(rng)};
    if (v.norm() < 1e-6) continue;
    CHECK(isl_angle_deg(v) == doctest::Approx(-isl_angle_deg(v * -1.0)).epsilon(1e-9));
  }
}

TEST_CASE("histogram normalization and averaging") {
  const std::vector<Snapshot> one = {
      build_snapshot(kShell, pattern_from_name("b0m1"), 0.0)};
  for (EdgeFilter filter :
       {EdgeFilter::intra, EdgeFilter::side, EdgeFilter::all}) {
    const AngleHistogram hist = direction_distribution(one, filter, 1.0);
    CHECK(hist.mass() == doctest::Approx(1.0).epsilon(1e-9));
  }

  // Averaging two identical snapshots changes nothing.
  const std::vector<Snapshot> two = {one[0], one[0]};
  const AngleHistogram single = direction_distribution(one, EdgeFilter::all);
  const AngleHistogram averaged = direction_distribution(two, EdgeFilter::all);
  REQUIRE(single.bin_count() == averaged.bin_count());
  for (int i = 0; i < single.bin_count(); ++i) {
    CHECK(single.density[i] == doctest::Approx(averaged.density[i]));
  }

  CHECK_THROWS_AS(direction_distribution({}, EdgeFilter::all),
                  std::invalid_argument);
  CHECK_THROWS_AS(direction_distribution(one, EdgeFilter::all, 7.0),
                  std::invalid_argument);
}

TEST_CASE("iISL direction concentrates at the inclination") {
  const TimeGrid grid = TimeGrid::make(0.0, 60.0, 20);
  std::vector<Snapshot> snaps;
  for (double t : grid.timestamps()) {
    snaps.push_back(build_snapshot(kShell, pattern_from_name("b0"), t));
  }
  const AngleHistogram hist = direction_distribution(snaps, EdgeFilter::intra);
  const int mode = hist.modal_bin();
  CHECK(std::abs(std::abs(hist.bin_center(mode)) - 53.0) <= 1.0);
}

TEST_CASE("pair sampling is seeded and distinct") {
  const auto a = sample_pairs(kShell, 500, 99);
  const auto b = sample_pairs(kShell, 500, 99);
  const auto c = sample_pairs(kShell, 500, 100);
  REQUIRE(a.size() == 500);
  bool identical = true, differs = false;
  for (std::size_t i = 0; i < 500; ++i) {
    identical &= a[i].a == b[i].a && a[i].b == b[i].b;
    differs |= !(a[i].a == c[i].a && a[i].b == c[i].b);
  }
  CHECK(identical);
  CHECK(differs);
  for (const auto& pair : a) CHECK(pair.a != pair.b);

  const WalkerShell tiny = WalkerShell::make(9, 3, 0, 53.0, 550.0);
  CHECK_THROWS_AS(sample_pairs(tiny, 100, 1), std::invalid_argument);
}

TEST_CASE("survey of a single adjacent pair") {
  const std::vector<Snapshot> snaps = {
      build_snapshot(kShell, pattern_from_name("b0"), 0.0)};
  const std::vector<PairSample> pair = {{SatId{2, 2}, SatId{2, 3}}};
  const Survey survey = latency_stretch_survey(snaps, pair);
  const double edge_km =
      chord_distance(snaps[0].position({2, 2}), snaps[0].position({2, 3}));
  const double expected_ms = edge_km / constants::kLightSpeedKmS * 1000.0;
  CHECK(survey.latency_ms.count == 1);
  CHECK(survey.latency_ms.mean == doctest::Approx(expected_ms));
  CHECK(survey.latency_ms.max == doctest::Approx(expected_ms));
}

TEST_CASE("survey statistics invariants") {
  const std::vector<Snapshot> snaps = {
      build_snapshot(kShell, pattern_from_name("b0m1"), 0.0)};
  const auto pairs = sample_pairs(kShell, 100, 7);
  const Survey survey = latency_stretch_survey(snaps, pairs);

  CHECK(survey.latency_ms.min <= survey.latency_ms.mean);
  CHECK(survey.latency_ms.mean <= survey.latency_ms.max);
  CHECK(std::is_sorted(survey.stretch.sorted_samples.begin(),
                       survey.stretch.sorted_samples.end()));
  // Stretch lower bound: chord/arc ratio lives in (2/pi, 1].
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double chord = chord_distance(snaps[0].position(pairs[i].a),
                                        snaps[0].position(pairs[i].b));
    const double geo = geodesic_distance(snaps[0].position(pairs[i].a),
                                         snaps[0].position(pairs[i].b));
    const double bound = chord / geo;
    CHECK(bound > 2.0 / constants::kPi - 1e-12);
    CHECK(bound <= 1.0 + 1e-12);
  }
  // A path of chords can undercut the arc slightly, never below chord/arc.
  for (double s : survey.stretch.sorted_samples) {
    CHECK(s > 2.0 / constants::kPi);
  }

  // Same seed, same config: bit-identical results.
  const Survey again = latency_stretch_survey(snaps, pairs);
  CHECK(again.latency_ms.mean == survey.latency_ms.mean);
  CHECK(again.stretch.sorted_samples == survey.stretch.sorted_samples);
}

TEST_CASE("ecdf fraction lookup") {
  SurveyStats stats = SurveyStats::from_samples({1.0, 2.0, 3.0, 4.0});
  CHECK(stats.fraction_below(2.5) == doctest::Approx(0.5));
  CHECK(stats.fraction_below(0.5) == doctest::Approx(0.0));
  CHECK(stats.fraction_below(10.0) == doctest::Approx(1.0));
  CHECK(stats.stddev == doctest::Approx(std::sqrt(1.25)));
}
