#pragma once

#include <string>

#include "busemann/space.hpp"

namespace busemann {

/// Poincare upper half-plane, curvature -1.
///
/// Distances use d = 2 asinh(|p - q| / (2 sqrt(y_p y_q))), which equals
/// arcosh(1 + |p - q|^2 / (2 y_p y_q)) but keeps full relative precision for
/// nearby points. Geodesics are traced in closed form by moving p to i with an
/// affine map and q onto a diameter of the Poincare disk via the Cayley map.
class HalfPlaneSpace final : public GeodesicSpace {
 public:
  Point make(double x, double y) const;

  std::string kind() const override { return "halfplane"; }
  void validate(const Point& p) const override;
  double distance(const Point& p, const Point& q) const override;
  double distance_to_segment(const Point& a, const Point& b, const Point& p) const override;

 protected:
  Point interpolate(const Point& p, const Point& q, double t) const override;

 private:
  const HalfPlanePoint& coords(const Point& p) const;
};

}  // namespace busemann
