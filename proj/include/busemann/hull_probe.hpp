#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "busemann/space.hpp"

namespace busemann {

/// Sampled diameters of B_0 = B, B_1, ..., B_depth, where B_{j+1} adds
/// `samples_per_level` geodesic points between random pairs of B_j. Each
/// sample's parameter comes from {0, 1/4, 1/2, 3/4, 1} or is uniform in
/// [0, 1], with equal probability. Deterministic in `seed`.
std::vector<double> convex_hull_diameter_probe(const GeodesicSpace& space,
                                               std::span<const Point> family, int depth,
                                               int samples_per_level, std::uint64_t seed);

}  // namespace busemann
