#include "busemann/euclidean.hpp"

#include <algorithm>
#include <cmath>

#include "busemann/errors.hpp"

namespace busemann {

EuclideanSpace::EuclideanSpace(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw DomainError("euclidean space needs dimension >= 1");
}

Point EuclideanSpace::make(std::initializer_list<double> x) const {
  Point p = EuclideanPoint{Coords(x.begin(), x.end())};
  validate(p);
  return p;
}

Point EuclideanSpace::make(const std::vector<double>& x) const {
  Point p = EuclideanPoint{Coords(x.begin(), x.end())};
  validate(p);
  return p;
}

const Coords& EuclideanSpace::coords(const Point& p) const {
  const auto* e = std::get_if<EuclideanPoint>(&p);
  if (e == nullptr) throw DomainError("point does not belong to a euclidean space");
  if (e->x.size() != dim_) throw DomainError("euclidean point has the wrong dimension");
  return e->x;
}

void EuclideanSpace::validate(const Point& p) const {
  for (double v : coords(p))
    if (!std::isfinite(v)) throw DomainError("euclidean coordinate is not finite");
}

double EuclideanSpace::distance(const Point& p, const Point& q) const {
  const auto& a = coords(p);
  const auto& b = coords(q);
  // Scaled accumulation, as in hypot, so tiny and huge separations stay accurate.
  double scale = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) scale = std::max(scale, std::abs(a[i] - b[i]));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    const double r = (a[i] - b[i]) / scale;
    s += r * r;
  }
  return scale * std::sqrt(s);
}

Point EuclideanSpace::interpolate(const Point& p, const Point& q, double t) const {
  const auto& a = coords(p);
  const auto& b = coords(q);
  Coords out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = t == 0.5 ? 0.5 * (a[i] + b[i]) : a[i] + t * (b[i] - a[i]);
  return EuclideanPoint{std::move(out)};
}

double EuclideanSpace::distance_to_segment(const Point& a, const Point& b, const Point& p) const {
  const auto& x = coords(a);
  const auto& y = coords(b);
  const auto& z = coords(p);
  double len2 = 0.0;
  double dot = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    len2 += (y[i] - x[i]) * (y[i] - x[i]);
    dot += (z[i] - x[i]) * (y[i] - x[i]);
  }
  const double t = len2 > 0.0 ? std::clamp(dot / len2, 0.0, 1.0) : 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    const double r = z[i] - (x[i] + t * (y[i] - x[i]));
    s += r * r;
  }
  return std::sqrt(s);
}

}  // namespace busemann
