#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "busemann/point.hpp"

namespace busemann {

/// A set of points lying on one geodesic segment [start, end], with each
/// point's arclength coordinate measured from `start`.
struct SegmentChart {
  Point start;
  Point end;
  double length = 0.0;
  std::vector<double> coords;
};

/// Uniquely geodesic metric space with nonpositive curvature in the sense of
/// Busemann. Implementations are immutable after construction.
class GeodesicSpace {
 public:
  virtual ~GeodesicSpace() = default;

  virtual std::string kind() const = 0;

  /// Throws DomainError if `p` does not belong to this space instance.
  virtual void validate(const Point& p) const = 0;

  virtual double distance(const Point& p, const Point& q) const = 0;

  /// Point at arclength fraction t along the geodesic from p to q.
  /// Throws DomainError for t outside [0, 1].
  Point geodesic_point(const Point& p, const Point& q, double t) const;

  Point midpoint(const Point& p, const Point& q) const { return interpolate(p, q, 0.5); }

  /// Distance from p to the geodesic segment [a, b]. Used only for
  /// collinearity detection, so it may be any quantity that is zero exactly
  /// on the segment and bounds the true distance from above.
  virtual double distance_to_segment(const Point& a, const Point& b, const Point& p) const = 0;

  /// If every point lies within `slack` of one geodesic segment, returns the
  /// chart of that segment (endpoints chosen among the points).
  std::optional<SegmentChart> chart(std::span<const Point> pts, double slack) const;

  double diameter(std::span<const Point> pts) const;

 protected:
  /// geodesic_point without the range check on t.
  virtual Point interpolate(const Point& p, const Point& q, double t) const = 0;
};

}  // namespace busemann
