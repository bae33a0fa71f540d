#ifndef CDRSCOPE_GEO_HPP
#define CDRSCOPE_GEO_HPP

#include <cmath>
#include <vector>

namespace cdrscope {

struct GeoPoint {
  double lon = 0;  // degrees
  double lat = 0;  // degrees
};

struct PlanarPoint {
  double x = 0;  // km east of reference
  double y = 0;  // km north of reference
};

inline double sq_dist(PlanarPoint a, PlanarPoint b) {
  double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double dist(PlanarPoint a, PlanarPoint b) {
  return std::sqrt(sq_dist(a, b));
}

// Equirectangular projection about a reference point. Longitudes are scaled
// by cos(ref_lat), so distances between nearby points stay within ~1% of
// great-circle values inside a narrow latitude band around the reference.
class Projection {
 public:
  static constexpr double kEarthRadiusKm = 6371.0;

  Projection(double ref_lon, double ref_lat);

  PlanarPoint to_plane(GeoPoint p) const {
    return {(p.lon - ref_lon_) * kx_, (p.lat - ref_lat_) * ky_};
  }
  GeoPoint to_geo(PlanarPoint p) const {
    return {ref_lon_ + p.x / kx_, ref_lat_ + p.y / ky_};
  }

  double ref_lon() const { return ref_lon_; }
  double ref_lat() const { return ref_lat_; }

 private:
  double ref_lon_, ref_lat_;
  double kx_, ky_;  // km per degree
};

double haversine_km(GeoPoint a, GeoPoint b);

// Rings are closed: front() == back(), at least 4 vertices. All polygon
// helpers below expect this representation.
using Ring = std::vector<PlanarPoint>;

double signed_area(const Ring& ring);  // shoelace; CCW positive
inline double ring_area(const Ring& ring) { return std::fabs(signed_area(ring)); }

// Even-odd ray cast with half-open edge rule; deterministic for points on
// edges but callers should not rely on a particular side there.
bool point_in_ring(PlanarPoint p, const Ring& ring);

struct Bbox {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
};

Bbox ring_bbox(const Ring& ring);

// Keeps the part of `ring` with dot(p - a, n) <= 0 where n = b - a, i.e. the
// half-plane of points at least as close to `a` as to `b`. Used for Voronoi
// cell construction; returns an empty ring when nothing survives.
Ring clip_halfplane_closer_to(const Ring& ring, PlanarPoint a, PlanarPoint b);

}  // namespace cdrscope

#endif
