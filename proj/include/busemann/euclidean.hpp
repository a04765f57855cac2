#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "busemann/space.hpp"

namespace busemann {

/// R^d with the Euclidean norm; geodesics are straight segments.
class EuclideanSpace final : public GeodesicSpace {
 public:
  explicit EuclideanSpace(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Point make(std::initializer_list<double> x) const;
  Point make(const std::vector<double>& x) const;

  std::string kind() const override { return "euclidean"; }
  void validate(const Point& p) const override;
  double distance(const Point& p, const Point& q) const override;
  double distance_to_segment(const Point& a, const Point& b, const Point& p) const override;

 protected:
  Point interpolate(const Point& p, const Point& q, double t) const override;

 private:
  const Coords& coords(const Point& p) const;

  std::size_t dim_;
};

}  // namespace busemann
