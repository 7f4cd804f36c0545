#pragma once

#include <cstdint>
#include <span>

#include "leogrid/routing.hpp"

namespace leogrid {

enum class EdgeFilter { intra, side, all };

/// Probability density of ISL elevation angles over [-90, 90] degrees.
/// Bins are centered on multiples of the bin width, so an inclination like
/// 53 degrees sits in the middle of a bin rather than on an edge.
struct AngleHistogram {
  double bin_width_deg = 1.0;
  std::vector<double> density;  // 180/width + 1 bins centered -90..90

  int bin_count() const { return static_cast<int>(density.size()); }
  double bin_center(int i) const { return -90.0 + i * bin_width_deg; }
  double bin_start(int i) const { return bin_center(i) - 0.5 * bin_width_deg; }
  double mass() const;
  int modal_bin() const;
};

/// Angle between an ISL and the equator plane; the edge vector is oriented
/// from the lexicographically smaller endpoint to the larger.
double isl_angle_deg(const Vec3& edge_vector);

AngleHistogram direction_distribution(std::span<const Snapshot> snapshots,
                                      EdgeFilter filter,
                                      double bin_width_deg = 1.0);

struct SurveyStats {
  std::size_t count = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double stddev = 0.0;
  std::vector<double> sorted_samples;  // ECDF support

  double fraction_below(double threshold) const;
  static SurveyStats from_samples(std::vector<double> samples);
};

struct PairSample {
  SatId a, b;
};

/// Distinct unordered satellite pairs, uniform without replacement.
std::vector<PairSample> sample_pairs(const WalkerShell& shell, std::size_t count,
                                     std::uint64_t seed);

struct Survey {
  SurveyStats latency_ms;
  SurveyStats stretch;
};

/// Shortest-path survey of every pair at every timestamp.
Survey latency_stretch_survey(std::span<const Snapshot> snapshots,
                              std::span<const PairSample> pairs,
                              GeoFrame frame = GeoFrame::satellite_altitude);

}  // namespace leogrid
