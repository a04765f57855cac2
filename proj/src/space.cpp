#include "busemann/space.hpp"

#include <algorithm>
#include <cmath>

#include "busemann/errors.hpp"

namespace busemann {

Point GeodesicSpace::geodesic_point(const Point& p, const Point& q, double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("geodesic_point: t must lie in [0, 1]");
  validate(p);
  validate(q);
  if (t == 0.0) return p;
  if (t == 1.0) return q;
  return interpolate(p, q, t);
}

std::optional<SegmentChart> GeodesicSpace::chart(std::span<const Point> pts, double slack) const {
  if (pts.empty()) return std::nullopt;
  // On a segment the farthest point from anything is an endpoint, so two
  // farthest-point sweeps find the candidate endpoints in linear time.
  auto farthest = [&](const Point& from) {
    std::size_t best = 0;
    double best_d = -1.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double d = distance(from, pts[i]);
      if (d > best_d) {
        best_d = d;
        best = i;
      }
    }
    return best;
  };
  const std::size_t a = farthest(pts[0]);
  const std::size_t b = farthest(pts[a]);
  SegmentChart c{pts[a], pts[b], distance(pts[a], pts[b]), {}};
  c.coords.reserve(pts.size());
  for (const Point& p : pts) {
    if (distance_to_segment(c.start, c.end, p) > slack) return std::nullopt;
    c.coords.push_back(std::clamp(distance(c.start, p), 0.0, c.length));
  }
  return c;
}

double GeodesicSpace::diameter(std::span<const Point> pts) const {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, distance(pts[i], pts[j]));
  return d;
}

}  // namespace busemann
