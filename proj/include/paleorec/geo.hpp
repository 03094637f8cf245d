#ifndef PALEOREC_GEO_HPP
#define PALEOREC_GEO_HPP

#include <cmath>
#include <numbers>

#include "paleorec/errors.hpp"

namespace paleorec {

inline constexpr double kEarthRadiusKm = 6371.0;

/// Geographic location in degrees. Longitude is normalized to
/// [-180, 180); latitude must lie in [-90, 90].
struct Location {
  double lon = 0.0;
  double lat = 0.0;

  Location() = default;
  Location(double lon_deg, double lat_deg) : lon(lon_deg), lat(lat_deg) {
    if (!(lat >= -90.0 && lat <= 90.0))
      throw data_error("Location: latitude out of [-90, 90]");
    if (!(lon >= -360.0 && lon < 720.0) || !std::isfinite(lon))
      throw data_error("Location: longitude not finite/sane");
    while (lon >= 180.0) lon -= 360.0;
    while (lon < -180.0) lon += 360.0;
  }

  friend bool operator==(const Location& a, const Location& b) {
    return a.lon == b.lon && a.lat == b.lat;
  }
};

/// Haversine distance in km on a sphere of radius 6371 km.
inline double great_circle_km(const Location& a, const Location& b) {
  const double deg = std::numbers::pi / 180.0;
  const double la1 = a.lat * deg, la2 = b.lat * deg;
  const double dla = (b.lat - a.lat) * deg;
  const double dlo = (b.lon - a.lon) * deg;
  const double s1 = std::sin(dla / 2), s2 = std::sin(dlo / 2);
  double h = s1 * s1 + std::cos(la1) * std::cos(la2) * s2 * s2;
  if (h > 1.0) h = 1.0;
  if (h < 0.0) h = 0.0;
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

}  // namespace paleorec

#endif
