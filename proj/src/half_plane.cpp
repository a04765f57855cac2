#include "busemann/half_plane.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "busemann/errors.hpp"

namespace busemann {

namespace {

using cd = std::complex<double>;

// Affine map sending p to i, followed by the Cayley map onto the unit disk.
// p itself lands on the disk center.
cd to_disk(const HalfPlanePoint& p, const HalfPlanePoint& q) {
  const cd w((q.x - p.x) / p.y, q.y / p.y);
  const cd i(0.0, 1.0);
  return (w - i) / (w + i);
}

HalfPlanePoint from_disk(const HalfPlanePoint& p, cd omega) {
  const cd i(0.0, 1.0);
  const cd w = i * (1.0 + omega) / (1.0 - omega);
  return {p.x + p.y * w.real(), p.y * std::max(w.imag(), 0.0)};
}

}  // namespace

Point HalfPlaneSpace::make(double x, double y) const {
  Point p = HalfPlanePoint{x, y};
  validate(p);
  return p;
}

const HalfPlanePoint& HalfPlaneSpace::coords(const Point& p) const {
  const auto* h = std::get_if<HalfPlanePoint>(&p);
  if (h == nullptr) throw DomainError("point does not belong to the half-plane");
  return *h;
}

void HalfPlaneSpace::validate(const Point& p) const {
  const auto& h = coords(p);
  if (!std::isfinite(h.x) || !std::isfinite(h.y)) throw DomainError("half-plane coordinate is not finite");
  if (!(h.y > 0.0)) throw DomainError("half-plane point needs y > 0");
}

double HalfPlaneSpace::distance(const Point& p, const Point& q) const {
  const auto& a = coords(p);
  const auto& b = coords(q);
  if (!(a.y > 0.0) || !(b.y > 0.0)) throw DomainError("half-plane point needs y > 0");
  const double chord = std::hypot(a.x - b.x, a.y - b.y);
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(a.y * b.y)));
}

Point HalfPlaneSpace::interpolate(const Point& p, const Point& q, double t) const {
  const auto& a = coords(p);
  const auto& b = coords(q);
  if (a == b) return p;
  // Vertical geodesics have the exact form y_t = y_p^(1-t) y_q^t.
  if (a.x == b.x) return HalfPlanePoint{a.x, a.y * std::pow(b.y / a.y, t)};
  const cd beta = to_disk(a, b);
  const double r = std::abs(beta);
  const double d = distance(p, q);
  const cd omega = beta * (std::tanh(0.5 * t * d) / r);
  HalfPlanePoint out = from_disk(a, omega);
  if (!(out.y > 0.0)) out.y = std::min(a.y, b.y) * 1e-300;
  return out;
}

double HalfPlaneSpace::distance_to_segment(const Point& a, const Point& b, const Point& p) const {
  const auto& ha = coords(a);
  const auto& hb = coords(b);
  const auto& hp = coords(p);
  const double dab = distance(a, b);
  const double dap = distance(a, p);
  const double dbp = distance(b, p);
  if (dab == 0.0) return dap;
  // In the disk centered at a, [a, b] lies on the diameter through beta.
  const cd beta = to_disk(ha, hb);
  const cd pi = to_disk(ha, hp);
  const cd u = beta / std::abs(beta);
  const double across = std::abs((pi * std::conj(u)).imag());
  const double off_line = std::asinh(2.0 * across / std::max(1.0 - std::norm(pi), 1e-300));
  return std::max({off_line, dap - dab, dbp - dab, 0.0});
}

}  // namespace busemann
