#pragma once
// Coordinates, great-circle distance and bounding-box containment.

#include <cmath>

#include "sitrep/errors.hpp"

namespace sitrep {

struct GeoPoint {
  double lat = 0.0;  // degrees, [-90, 90]
  double lon = 0.0;  // degrees, [-180, 180]

  bool operator==(const GeoPoint&) const = default;
};

inline bool is_valid(const GeoPoint& p) {
  return std::isfinite(p.lat) && std::isfinite(p.lon) && p.lat >= -90.0 &&
         p.lat <= 90.0 && p.lon >= -180.0 && p.lon <= 180.0;
}

// Mean Earth radius, fixed.
constexpr double kEarthRadiusKm = 6371.0088;

inline double haversine_km(const GeoPoint& p, const GeoPoint& q) {
  constexpr double deg = 3.14159265358979323846 / 180.0;
  const double phi1 = p.lat * deg;
  const double phi2 = q.lat * deg;
  const double dphi = (q.lat - p.lat) * deg;
  const double dlam = (q.lon - p.lon) * deg;
  const double s1 = std::sin(dphi / 2.0);
  const double s2 = std::sin(dlam / 2.0);
  const double a = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(a)));
}

// Corners are (southwest, northeast); containment is inclusive.
struct BoundingBox {
  GeoPoint sw;
  GeoPoint ne;
};

inline bool in_bbox(const GeoPoint& p, const BoundingBox& box) {
  return p.lat >= box.sw.lat && p.lat <= box.ne.lat && p.lon >= box.sw.lon &&
         p.lon <= box.ne.lon;
}

}  // namespace sitrep
