#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <vector>

namespace leogrid {

namespace constants {
inline constexpr double kLightSpeedKmS = 299792.458;
inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kMuEarth = 398600.4418;           // km^3/s^2
inline constexpr double kEarthRotationRadS = 7.2921159e-5;
inline constexpr double kBoltzmann = 1.380649e-23;        // J/K
inline constexpr double kPi = 3.14159265358979323846;
}  // namespace constants

inline double deg2rad(double d) { return d * constants::kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / constants::kPi; }

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
};

using Position3D = Vec3;

/// Satellite identity within a shell: orbit plane index and in-plane slot.
struct SatId {
  int plane = 0;
  int slot = 0;

  auto operator<=>(const SatId&) const = default;
};

/// Walker delta shell T/P/F/i at a fixed circular-orbit altitude.
struct WalkerShell {
  int total_sats = 0;       // T
  int planes = 0;           // P
  int phase_factor = 0;     // F in [0, P-1]
  double inclination_deg = 53.0;
  double altitude_km = 550.0;

  int sats_per_plane() const { return total_sats / planes; }  // Q
  double radius_km() const { return constants::kEarthRadiusKm + altitude_km; }
  double orbital_period_s() const {
    const double a = radius_km();
    return 2.0 * constants::kPi * std::sqrt(a * a * a / constants::kMuEarth);
  }

  static WalkerShell make(int total_sats, int planes, int phase_factor,
                          double inclination_deg, double altitude_km);

  bool contains(SatId sat) const {
    return sat.plane >= 0 && sat.plane < planes && sat.slot >= 0 &&
           sat.slot < sats_per_plane();
  }
  int index_of(SatId sat) const { return sat.plane * sats_per_plane() + sat.slot; }
  SatId sat_at(int index) const {
    return {index / sats_per_plane(), index % sats_per_plane()};
  }
};

/// Uniform simulation time grid starting at the epoch.
struct TimeGrid {
  double epoch_s = 0.0;
  double step_s = 60.0;
  int count = 1;

  static TimeGrid make(double epoch_s, double step_s, int count);
  std::vector<double> timestamps() const;
};

/// Phase factor that maximizes the adjacent-plane phase bias.
int max_phase_factor(int planes);

/// Inertial position of one satellite at time t (circular Keplerian orbit).
Position3D satellite_position(const WalkerShell& shell, SatId sat, double t_s);

/// Straight-line distance between two points.
double chord_distance(const Position3D& a, const Position3D& b);

/// Great-circle arc between two points at their mean radius.
double geodesic_distance(const Position3D& a, const Position3D& b);

/// Surface point of a ground station, rotating with the Earth from its
/// epoch longitude.
Position3D ground_station_position(double lat_deg, double lon_deg, double t_s);

}  // namespace leogrid
