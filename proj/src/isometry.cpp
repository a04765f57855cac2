#include "busemann/isometry.hpp"

#include <cmath>
#include <complex>

#include "busemann/errors.hpp"

namespace busemann {

Isometry euclidean_motion(const EuclideanSpace& space, std::vector<double> matrix, std::vector<double> shift) {
  const std::size_t d = space.dim();
  if (matrix.size() != d * d || shift.size() != d) throw DomainError("motion has the wrong dimension");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < d; ++k) dot += matrix[i * d + k] * matrix[j * d + k];
      if (std::abs(dot - (i == j ? 1.0 : 0.0)) > 1e-9) throw DomainError("motion matrix is not orthogonal");
    }
  return [&space, d, matrix = std::move(matrix), shift = std::move(shift)](const Point& p) -> Point {
    space.validate(p);
    const auto& x = std::get<EuclideanPoint>(p).x;
    Coords y(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      double s = shift[i];
      for (std::size_t k = 0; k < d; ++k) s += matrix[i * d + k] * x[k];
      y[i] = s;
    }
    return EuclideanPoint{std::move(y)};
  };
}

Isometry planar_rotation(const EuclideanSpace& space, double angle, std::vector<double> center) {
  if (space.dim() != 2 || center.size() != 2) throw DomainError("planar rotation needs dimension 2");
  const double c = std::cos(angle), s = std::sin(angle);
  return euclidean_motion(space, {c, -s, s, c},
                          {center[0] - c * center[0] + s * center[1], center[1] - s * center[0] - c * center[1]});
}

Isometry tree_automorphism(const MetricTree& tree, std::vector<int> perm) {
  const std::size_t n = tree.vertex_count();
  if (perm.size() != n) throw DomainError("vertex permutation has the wrong length");
  std::vector<char> hit(n, 0);
  for (int v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)])
      throw DomainError("not a vertex permutation");
    hit[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> edge_image(tree.edge_count());
  for (std::size_t e = 0; e < tree.edge_count(); ++e) {
    const int ei = static_cast<int>(e);
    const int img = tree.find_edge(perm[static_cast<std::size_t>(tree.edge_parent(ei))],
                                   perm[static_cast<std::size_t>(tree.edge_child(ei))]);
    if (img < 0 || tree.edge_length(img) != tree.edge_length(ei))
      throw DomainError("vertex permutation is not a tree automorphism");
    edge_image[e] = img;
  }
  return [&tree, perm = std::move(perm), edge_image = std::move(edge_image)](const Point& p) -> Point {
    tree.validate(p);
    const auto& t = std::get<TreePoint>(p);
    if (t.edge == TreePoint::kRootEdge) return tree.vertex(perm[0]);
    const std::size_t e = static_cast<std::size_t>(t.edge);
    const int img = edge_image[e];
    const int from = perm[static_cast<std::size_t>(tree.edge_parent(t.edge))];
    const double len = tree.edge_length(img);
    const double offset = tree.edge_parent(img) == from ? t.offset : len - t.offset;
    return tree.canonical(TreePoint{img, offset});
  };
}

Isometry mobius(const HalfPlaneSpace& space, double a, double b, double c, double d) {
  if (std::abs(a * d - b * c - 1.0) > 1e-12) throw DomainError("mobius map needs ad - bc = 1");
  return [&space, a, b, c, d](const Point& p) -> Point {
    space.validate(p);
    const auto& h = std::get<HalfPlanePoint>(p);
    const std::complex<double> z(h.x, h.y);
    const std::complex<double> w = (a * z + b) / (c * z + d);
    return HalfPlanePoint{w.real(), w.imag()};
  };
}

Isometry halfplane_reflection(const HalfPlaneSpace& space) {
  return [&space](const Point& p) -> Point {
    space.validate(p);
    const auto& h = std::get<HalfPlanePoint>(p);
    return HalfPlanePoint{-h.x, h.y};
  };
}

RationalMeasure pushforward(const RationalMeasure& mu, const Isometry& g) {
  std::vector<RationalMeasure::Atom> atoms;
  for (const auto& a : mu.atoms()) atoms.push_back({g(a.point), a.weight});
  return RationalMeasure(std::move(atoms));
}

RationalMeasure orbit_measure(const Point& p, const std::vector<Isometry>& group) {
  if (group.empty()) throw DomainError("orbit of an empty group");
  std::vector<RationalMeasure::Atom> atoms;
  const Fraction w(1, static_cast<std::int64_t>(group.size()));
  for (const Isometry& g : group) atoms.push_back({g(p), w});
  return RationalMeasure(std::move(atoms));
}

}  // namespace busemann
