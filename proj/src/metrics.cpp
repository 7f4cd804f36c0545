#include "leogrid/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace leogrid {

double AngleHistogram::mass() const {
  double total = 0.0;
  for (double d : density) total += d * bin_width_deg;
  return total;
}

int AngleHistogram::modal_bin() const {
  return static_cast<int>(std::max_element(density.begin(), density.end()) -
                          density.begin());
}

double isl_angle_deg(const Vec3& edge_vector) {
  const double n = edge_vector.norm();
  if (n <= 0.0) throw std::invalid_argument("isl_angle_deg: zero vector");
  const double cos_polar = std::clamp(edge_vector.z / n, -1.0, 1.0);
  return 90.0 - rad2deg(std::acos(cos_polar));
}

AngleHistogram direction_distribution(std::span<const Snapshot> snapshots,
                                      EdgeFilter filter, double bin_width_deg) {
  if (snapshots.empty()) {
    throw std::invalid_argument("direction_distribution: no snapshots");
  }
  const double bins_exact = 180.0 / bin_width_deg;
  const int spans = static_cast<int>(std::lround(bins_exact));
  if (spans < 1 || std::abs(bins_exact - spans) > 1e-9) {
    throw std::invalid_argument("direction_distribution: bin width must divide 180");
  }
  const int bins = spans + 1;  // centers -90, -90+w, ..., 90

  AngleHistogram hist;
  hist.bin_width_deg = bin_width_deg;
  hist.density.assign(bins, 0.0);

  for (const Snapshot& snap : snapshots) {
    std::vector<double> counts(bins, 0.0);
    std::size_t total = 0;
    for (const Edge& e : snap.edges) {
      if (filter == EdgeFilter::intra && e.kind != LinkKind::intra) continue;
      if (filter == EdgeFilter::side && e.kind != LinkKind::side) continue;
      // Canonical orientation: edges store a < b by (plane, slot).
      const Vec3 vec = snap.position(e.b) - snap.position(e.a);
      const double angle = isl_angle_deg(vec);
      int bin = static_cast<int>(std::lround((angle + 90.0) / bin_width_deg));
      bin = std::clamp(bin, 0, bins - 1);
      counts[bin] += 1.0;
      ++total;
    }
    if (total == 0) {
      throw std::invalid_argument("direction_distribution: empty edge set after filter");
    }
    for (int i = 0; i < bins; ++i) {
      hist.density[i] += counts[i] / (total * bin_width_deg);
    }
  }
  for (double& d : hist.density) d /= snapshots.size();
  return hist;
}

SurveyStats SurveyStats::from_samples(std::vector<double> samples) {
  SurveyStats stats;
  stats.count = samples.size();
  if (samples.empty()) return stats;
  std::sort(samples.begin(), samples.end());
  stats.min = samples.front();
  stats.max = samples.back();
  double sum = 0.0;
  for (double s : samples) sum += s;
  stats.mean = sum / samples.size();
  double sq = 0.0;
  for (double s : samples) sq += (s - stats.mean) * (s - stats.mean);
  stats.stddev = std::sqrt(sq / samples.size());
  stats.sorted_samples = std::move(samples);
  return stats;
}

double SurveyStats::fraction_below(double threshold) const {
  if (sorted_samples.empty()) return 0.0;
  const auto it = std::lower_bound(sorted_samples.begin(), sorted_samples.end(),
                                   threshold);
  return static_cast<double>(it - sorted_samples.begin()) / sorted_samples.size();
}

std::vector<PairSample> sample_pairs(const WalkerShell& shell, std::size_t count,
                                     std::uint64_t seed) {
  const std::size_t n = static_cast<std::size_t>(shell.total_sats);
  const std::size_t max_pairs = n * (n - 1) / 2;
  if (count > max_pairs) {
    throw std::invalid_argument("sample_pairs: more pairs requested than exist");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<PairSample> out;
  out.reserve(count);
  while (out.size() < count) {
    std::size_t i = dist(rng), j = dist(rng);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    if (!seen.insert({i, j}).second) continue;
    out.push_back({shell.sat_at(static_cast<int>(i)),
                   shell.sat_at(static_cast<int>(j))});
  }
  return out;
}

Survey latency_stretch_survey(std::span<const Snapshot> snapshots,
                              std::span<const PairSample> pairs, GeoFrame frame) {
  std::vector<double> latencies, stretches;
  latencies.reserve(snapshots.size() * pairs.size());
  stretches.reserve(snapshots.size() * pairs.size());
  for (const Snapshot& snap : snapshots) {
    for (const PairSample& pair : pairs) {
      const PathResult path = shortest_path(snap, pair.a, pair.b, frame);
      latencies.push_back(path.latency_ms);
      stretches.push_back(path.stretch);
    }
  }
  Survey survey;
  survey.latency_ms = SurveyStats::from_samples(std::move(latencies));
  survey.stretch = SurveyStats::from_samples(std::move(stretches));
  return survey;
}

}  // namespace leogrid
