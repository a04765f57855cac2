#pragma once

#include <algorithm>
#include <compare>
#include <variant>

#include <boost/container/small_vector.hpp>

namespace busemann {

/// Coordinates are stored inline up to dimension 4.
using Coords = boost::container::small_vector<double, 4>;

struct EuclideanPoint {
  Coords x;
  friend bool operator==(const EuclideanPoint& a, const EuclideanPoint& b) { return a.x == b.x; }
  friend std::partial_ordering operator<=>(const EuclideanPoint& a, const EuclideanPoint& b) {
    return std::lexicographical_compare_three_way(a.x.begin(), a.x.end(), b.x.begin(), b.x.end());
  }
};

/// Position on a metric tree: `offset` is measured from the edge's parent-side
/// vertex. The tree root is the point with edge == kRootEdge and offset 0.
struct TreePoint {
  static constexpr int kRootEdge = -1;
  int edge = kRootEdge;
  double offset = 0.0;
  friend auto operator<=>(const TreePoint&, const TreePoint&) = default;
};

/// Upper half-plane model, y > 0.
struct HalfPlanePoint {
  double x = 0.0;
  double y = 1.0;
  friend auto operator<=>(const HalfPlanePoint&, const HalfPlanePoint&) = default;
};

using Point = std::variant<EuclideanPoint, TreePoint, HalfPlanePoint>;

}  // namespace busemann
