#include "busemann/hull_probe.hpp"

#include "busemann/errors.hpp"
#include "busemann/rng.hpp"

namespace busemann {

std::vector<double> convex_hull_diameter_probe(const GeodesicSpace& space, std::span<const Point> family,
                                               int depth, int samples_per_level, std::uint64_t seed) {
  if (family.empty()) throw DomainError("hull probe needs a nonempty family");
  if (depth < 1) throw DomainError("hull probe needs depth >= 1");
  if (samples_per_level < 0) throw DomainError("hull probe needs samples_per_level >= 0");
  for (const Point& p : family) space.validate(p);

  static constexpr double kGrid[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  CounterRng rng(seed);
  std::vector<Point> level(family.begin(), family.end());
  std::vector<double> out{space.diameter(level)};
  for (int j = 0; j < depth; ++j) {
    const auto size = static_cast<std::int64_t>(level.size());
    std::vector<Point> next = level;
    for (int s = 0; s < samples_per_level; ++s) {
      const auto& p = level[static_cast<std::size_t>(rng.uniform_int(0, size - 1))];
      const auto& q = level[static_cast<std::size_t>(rng.uniform_int(0, size - 1))];
      const double t = rng.uniform() < 0.5 ? kGrid[rng.uniform_int(0, 4)] : rng.uniform();
      next.push_back(space.geodesic_point(p, q, t));
    }
    level = std::move(next);
    out.push_back(space.diameter(level));
  }
  return out;
}

}  // namespace busemann
