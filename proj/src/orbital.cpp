#include "leogrid/orbital.hpp"

#include <algorithm>

namespace leogrid {

WalkerShell WalkerShell::make(int total_sats, int planes, int phase_factor,
                              double inclination_deg, double altitude_km) {
  if (planes < 1 || total_sats < 1) {
    throw std::invalid_argument("WalkerShell: T and P must be positive");
  }
  if (total_sats % planes != 0) {
    throw std::invalid_argument("WalkerShell: T must be divisible by P");
  }
  if (phase_factor < 0 || phase_factor > planes - 1) {
    throw std::invalid_argument("WalkerShell: F must lie in [0, P-1]");
  }
  if (inclination_deg <= 0.0 || inclination_deg > 180.0) {
    throw std::invalid_argument("WalkerShell: inclination must be in (0, 180]");
  }
  if (altitude_km <= 0.0) {
    throw std::invalid_argument("WalkerShell: altitude must be positive");
  }
  return {total_sats, planes, phase_factor, inclination_deg, altitude_km};
}

TimeGrid TimeGrid::make(double epoch_s, double step_s, int count) {
  if (step_s <= 0.0) throw std::invalid_argument("TimeGrid: step must be positive");
  if (count < 1) throw std::invalid_argument("TimeGrid: count must be >= 1");
  return {epoch_s, step_s, count};
}

std::vector<double> TimeGrid::timestamps() const {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = epoch_s + i * step_s;
  return out;
}

int max_phase_factor(int planes) {
  if (planes < 1) throw std::invalid_argument("max_phase_factor: P must be >= 1");
  return (planes % 2 == 0) ? planes / 2 - 1 : (planes - 1) / 2;
}

Position3D satellite_position(const WalkerShell& shell, SatId sat, double t_s) {
  if (!shell.contains(sat)) {
    throw std::invalid_argument("satellite_position: SatId out of range");
  }
  const double a = shell.radius_km();
  const double raan = 2.0 * constants::kPi * sat.plane / shell.planes;
  const double inc = deg2rad(shell.inclination_deg);
  const double mean_motion = std::sqrt(constants::kMuEarth / (a * a * a));
  // Argument of latitude: in-plane slot phase, Walker inter-plane phasing
  // F*360/T per plane, plus the mean anomaly accumulated since epoch.
  const double u = 2.0 * constants::kPi * sat.slot / shell.sats_per_plane() +
                   2.0 * constants::kPi * sat.plane * shell.phase_factor /
                       shell.total_sats +
                   mean_motion * t_s;

  const double cos_u = std::cos(u), sin_u = std::sin(u);
  const double cos_o = std::cos(raan), sin_o = std::sin(raan);
  const double cos_i = std::cos(inc), sin_i = std::sin(inc);
  return {a * (cos_o * cos_u - sin_o * cos_i * sin_u),
          a * (sin_o * cos_u + cos_o * cos_i * sin_u),
          a * sin_i * sin_u};
}

double chord_distance(const Position3D& a, const Position3D& b) {
  return (a - b).norm();
}

double geodesic_distance(const Position3D& a, const Position3D& b) {
  const double na = a.norm(), nb = b.norm();
  if (na <= 0.0 || nb <= 0.0) {
    throw std::invalid_argument("geodesic_distance: zero-norm input");
  }
  const double cos_theta = std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
  return 0.5 * (na + nb) * std::acos(cos_theta);
}

Position3D ground_station_position(double lat_deg, double lon_deg, double t_s) {
  if (lat_deg < -90.0 || lat_deg > 90.0 || lon_deg < -180.0 || lon_deg > 180.0) {
    throw std::invalid_argument("ground_station_position: coordinates out of range");
  }
  const double lat = deg2rad(lat_deg);
  const double lon = deg2rad(lon_deg) + constants::kEarthRotationRadS * t_s;
  const double r = constants::kEarthRadiusKm;
  return {r * std::cos(lat) * std::cos(lon), r * std::cos(lat) * std::sin(lon),
          r * std::sin(lat)};
}

}  // namespace leogrid
