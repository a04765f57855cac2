#pragma once

#include <functional>
#include <string>
#include <vector>

#include "busemann/euclidean.hpp"
#include "busemann/family.hpp"
#include "busemann/half_plane.hpp"
#include "busemann/metric_tree.hpp"

namespace busemann {

/// Distance-preserving self-map of one space.
using Isometry = std::function<Point(const Point&)>;

/// x -> R x + t with R orthogonal (row-major d x d). Throws DomainError if R
/// is not orthogonal to within 1e-9.
Isometry euclidean_motion(const EuclideanSpace& space, std::vector<double> matrix, std::vector<double> shift);

/// Rotation of the plane by `angle` about `center`.
Isometry planar_rotation(const EuclideanSpace& space, double angle, std::vector<double> center);

/// Automorphism induced by a vertex permutation (image of vertex i is
/// vertex perm[i]). Throws DomainError unless edges and lengths are preserved.
Isometry tree_automorphism(const MetricTree& tree, std::vector<int> perm);

/// z -> (a z + b) / (c z + d) with real coefficients and ad - bc = 1.
Isometry mobius(const HalfPlaneSpace& space, double a, double b, double c, double d);

/// z -> -conj(z).
Isometry halfplane_reflection(const HalfPlaneSpace& space);

RationalMeasure pushforward(const RationalMeasure& mu, const Isometry& g);

/// Equal-weight measure on the orbit {g(p) : g in group}, one atom per element
/// before merging.
RationalMeasure orbit_measure(const Point& p, const std::vector<Isometry>& group);

}  // namespace busemann
