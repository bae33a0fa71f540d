#include "geo.hpp"

#include <algorithm>
#include <numbers>

namespace cdrscope {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
}

Projection::Projection(double ref_lon, double ref_lat)
    : ref_lon_(ref_lon), ref_lat_(ref_lat) {
  ky_ = kEarthRadiusKm * kDegToRad;
  kx_ = kEarthRadiusKm * kDegToRad * std::cos(ref_lat * kDegToRad);
}

double haversine_km(GeoPoint a, GeoPoint b) {
  double la1 = a.lat * kDegToRad, la2 = b.lat * kDegToRad;
  double dla = (b.lat - a.lat) * kDegToRad;
  double dlo = (b.lon - a.lon) * kDegToRad;
  double s = std::sin(dla / 2) * std::sin(dla / 2) +
             std::cos(la1) * std::cos(la2) * std::sin(dlo / 2) * std::sin(dlo / 2);
  return 2.0 * Projection::kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(s)));
}

double signed_area(const Ring& ring) {
  if (ring.size() < 3) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
    acc += ring[i].x * ring[i + 1].y - ring[i + 1].x * ring[i].y;
  }
  return acc / 2.0;
}

bool point_in_ring(PlanarPoint p, const Ring& ring) {
  bool inside = false;
  for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
    PlanarPoint a = ring[i], b = ring[i + 1];
    if ((a.y > p.y) != (b.y > p.y)) {
      double t = (p.y - a.y) / (b.y - a.y);
      double x = a.x + t * (b.x - a.x);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

Bbox ring_bbox(const Ring& ring) {
  Bbox b;
  if (ring.empty()) return b;
  b.min_x = b.max_x = ring[0].x;
  b.min_y = b.max_y = ring[0].y;
  for (const auto& p : ring) {
    b.min_x = std::min(b.min_x, p.x);
    b.max_x = std::max(b.max_x, p.x);
    b.min_y = std::min(b.min_y, p.y);
    b.max_y = std::max(b.max_y, p.y);
  }
  return b;
}

Ring clip_halfplane_closer_to(const Ring& ring, PlanarPoint a, PlanarPoint b) {
  if (ring.size() < 4) return {};
  // Signed distance along the bisector normal: f(p) < 0 strictly closer to a.
  PlanarPoint mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
  double nx = b.x - a.x, ny = b.y - a.y;
  auto f = [&](PlanarPoint p) { return (p.x - mid.x) * nx + (p.y - mid.y) * ny; };

  Ring out;
  out.reserve(ring.size() + 2);
  for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
    PlanarPoint cur = ring[i], nxt = ring[i + 1];
    double fc = f(cur), fn = f(nxt);
    if (fc <= 0) {
      out.push_back(cur);
      if (fn > 0) {
        double t = fc / (fc - fn);
        out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
      }
    } else if (fn <= 0) {
      double t = fc / (fc - fn);
      out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  if (out.size() < 3) return {};
  out.push_back(out.front());
  return out;
}

}  // namespace cdrscope
