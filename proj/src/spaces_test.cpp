#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "busemann/errors.hpp"
#include "busemann/euclidean.hpp"
#include "busemann/half_plane.hpp"
#include "busemann/hull_probe.hpp"
#include "busemann/metric_tree.hpp"
#include "support/generators.hpp"

namespace busemann {
namespace {

using testing::random_point;

struct Roster {
  EuclideanSpace e1{1}, e2{2}, e4{4};
  MetricTree tripod = MetricTree::tripod(1.0);
  MetricTree tree = [] {
    CounterRng rng(7);
    return testing::random_tree(rng, 9);
  }();
  HalfPlaneSpace hp;
};

template <class Space, class Check>
void for_random(const Space& space, std::uint64_t seed, int count, int arity, Check check) {
  CounterRng rng(seed);
  for (int i = 0; i < count; ++i) check(testing::random_points(space, rng, arity));
}

// Metric axioms, geodesic parametrization and the Busemann midpoint inequality
// for one space.
template <class Space>
void check_geometry(const Space& s, std::uint64_t seed) {
  for_random(s, seed, 1000, 3, [&](const std::vector<Point>& v) {
    const Point &p = v[0], &q = v[1], &r = v[2];
    EXPECT_EQ(s.distance(p, q), s.distance(q, p));
    EXPECT_EQ(s.distance(p, p), 0.0);
    EXPECT_GE(s.distance(p, q), 0.0);
    EXPECT_GE(s.distance(p, r) + s.distance(r, q) - s.distance(p, q), -1e-12);
  });
  for_random(s, seed + 1, 1000, 2, [&](const std::vector<Point>& v) {
    const double d = s.distance(v[0], v[1]);
    const Point m = s.midpoint(v[0], v[1]);
    EXPECT_NEAR(s.distance(m, v[0]), d / 2, 1e-9);
    EXPECT_NEAR(s.distance(m, v[1]), d / 2, 1e-9);
  });
  CounterRng trng(seed + 2);
  for_random(s, seed + 3, 1000, 2, [&](const std::vector<Point>& v) {
    const double t = trng.uniform();
    const double d = s.distance(v[0], v[1]);
    const Point g = s.geodesic_point(v[0], v[1], t);
    EXPECT_NEAR(s.distance(g, v[0]), t * d, 1e-9);
    EXPECT_NEAR(s.distance(g, v[1]), (1 - t) * d, 1e-9);
  });
  for_random(s, seed + 4, 1000, 4, [&](const std::vector<Point>& v) {
    const Point m = s.midpoint(v[0], v[1]);
    const Point m2 = s.midpoint(v[2], v[3]);
    EXPECT_LE(s.distance(m, m2), s.distance(v[0], v[2]) / 2 + s.distance(v[1], v[3]) / 2 + 1e-9);
  });
}

TEST(Spaces, EuclideanGeometry) {
  Roster r;
  check_geometry(r.e1, 11);
  check_geometry(r.e2, 12);
  check_geometry(r.e4, 13);
}

TEST(Spaces, TreeGeometry) {
  Roster r;
  check_geometry(r.tripod, 21);
  check_geometry(r.tree, 22);
}

TEST(Spaces, HalfPlaneGeometry) {
  Roster r;
  check_geometry(r.hp, 31);
}

TEST(Spaces, EuclideanExamples) {
  EuclideanSpace e(2);
  EXPECT_EQ(e.distance(e.make({0, 0}), e.make({3, 4})), 5.0);
  EXPECT_EQ(e.midpoint(e.make({0, 0}), e.make({2, 0})), e.make({1, 0}));
  EXPECT_EQ(e.geodesic_point(e.make({0, 0}), e.make({4, 0}), 0.25), e.make({1, 0}));
}

TEST(Spaces, TripodExamples) {
  const MetricTree t = MetricTree::tripod(1.0);
  EXPECT_DOUBLE_EQ(t.distance(t.vertex("x"), t.vertex("y")), 2.0);
  EXPECT_EQ(t.midpoint(t.vertex("x"), t.vertex("y")), t.vertex("o"));
  const Point a = t.on_edge("o", "x", 0.2), b = t.on_edge("o", "x", 0.6);
  EXPECT_EQ(t.midpoint(a, b), t.on_edge("o", "x", 0.4));
}

TEST(Spaces, TreeCanonicalForm) {
  const MetricTree t = MetricTree::tripod(1.0);
  EXPECT_EQ(t.on_edge("o", "x", 0.0), t.vertex("o"));
  EXPECT_EQ(t.on_edge("x", "o", 1.0), t.vertex("o"));
  EXPECT_EQ(t.on_edge("o", "y", 1.0), t.vertex("y"));
  EXPECT_EQ(t.on_edge("o", "y", 0.25), t.on_edge("y", "o", 0.75));
}

TEST(Spaces, HalfPlaneVerticalOracles) {
  HalfPlaneSpace h;
  CounterRng rng(5);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(-3, 3), y1 = std::exp(rng.uniform(-2, 2)), y2 = std::exp(rng.uniform(-2, 2));
    const double t = rng.uniform();
    const Point p = h.make(x, y1), q = h.make(x, y2);
    EXPECT_NEAR(h.distance(p, q), std::abs(std::log(y2 / y1)), 1e-12);
    const auto& g = std::get<HalfPlanePoint>(h.geodesic_point(p, q, t));
    EXPECT_NEAR(g.x, x, 1e-12);
    EXPECT_NEAR(g.y, std::pow(y1, 1 - t) * std::pow(y2, t), 1e-12 * std::max(y1, y2));
  }
  EXPECT_NEAR(h.distance(h.make(0, 1), h.make(0, std::exp(1.0))), 1.0, 1e-15);
  const auto& m = std::get<HalfPlanePoint>(h.midpoint(h.make(0, 1), h.make(0, 4)));
  EXPECT_NEAR(m.x, 0.0, 1e-15);
  EXPECT_NEAR(m.y, 2.0, 1e-14);
  const auto& g = std::get<HalfPlanePoint>(h.geodesic_point(h.make(0, 1), h.make(0, 16), 0.5));
  EXPECT_NEAR(g.y, 4.0, 1e-13);
}

TEST(Spaces, HalfPlaneArcoshFormula) {
  HalfPlaneSpace h;
  CounterRng rng(6);
  for (int i = 0; i < 200; ++i) {
    const double x1 = rng.uniform(-2, 2), x2 = rng.uniform(-2, 2), y1 = rng.uniform(0.1, 3), y2 = rng.uniform(0.1, 3);
    const double want = std::acosh(1 + ((x1 - x2) * (x1 - x2) + (y1 - y2) * (y1 - y2)) / (2 * y1 * y2));
    EXPECT_NEAR(h.distance(h.make(x1, y1), h.make(x2, y2)), want, 1e-9 * std::max(1.0, want));
  }
}

TEST(Spaces, GeodesicEndpointsExact) {
  Roster r;
  CounterRng rng(8);
  auto check = [](const GeodesicSpace& s, const Point& p, const Point& q) {
    EXPECT_EQ(s.geodesic_point(p, q, 0.0), p);
    EXPECT_EQ(s.geodesic_point(p, q, 1.0), q);
  };
  for (int i = 0; i < 50; ++i) {
    check(r.e2, random_point(r.e2, rng), random_point(r.e2, rng));
    check(r.tree, random_point(r.tree, rng), random_point(r.tree, rng));
    check(r.hp, random_point(r.hp, rng), random_point(r.hp, rng));
  }
}

TEST(Spaces, DomainErrors) {
  Roster r;
  const Point p = r.e2.make({0, 0}), q = r.e2.make({1, 0});
  EXPECT_THROW(r.e2.geodesic_point(p, q, -0.1), DomainError);
  EXPECT_THROW(r.e2.geodesic_point(p, q, 1.5), DomainError);
  EXPECT_THROW(r.e2.geodesic_point(p, q, std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(r.e2.distance(p, r.e4.make({0, 0, 0, 0})), DomainError);
  EXPECT_THROW(r.e2.distance(p, r.tripod.vertex("x")), DomainError);
  EXPECT_THROW(r.hp.make(0.0, 0.0), DomainError);
  EXPECT_THROW(r.hp.distance(r.hp.make(0, 1), HalfPlanePoint{0.0, -1.0}), DomainError);
  EXPECT_THROW(r.tripod.distance(r.tripod.vertex("x"), TreePoint{0, 1.5}), DomainError);
  EXPECT_THROW(r.tripod.distance(r.tripod.vertex("x"), TreePoint{7, 0.5}), DomainError);
}

TEST(Spaces, TreeConstructionErrors) {
  using E = MetricTree::EdgeSpec;
  EXPECT_THROW(MetricTree({"a", "b", "c"}, {E{"a", "b", 1}, E{"b", "c", 1}, E{"c", "a", 1}}), DomainError);
  EXPECT_THROW(MetricTree({"a", "b", "c", "d"}, {E{"a", "b", 1}, E{"c", "d", 1}}), DomainError);
  EXPECT_THROW(MetricTree({"a", "b"}, {E{"a", "b", 0.0}}), DomainError);
  EXPECT_THROW(MetricTree({"a", "b"}, {E{"a", "q", 1.0}}), DomainError);
  EXPECT_THROW(MetricTree({"a", "a"}, {E{"a", "a", 1.0}}), DomainError);
}

// Oracle: Floyd-Warshall on the vertex graph.
TEST(Spaces, TreeDistanceMatchesShortestPaths) {
  CounterRng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::draw_int(rng, 2, 12);
    const MetricTree t = testing::random_tree(rng, n);
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> d(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (int e = 0; e < static_cast<int>(t.edge_count()); ++e) {
      const int a = t.edge_parent(e), b = t.edge_child(e);
      d[a][b] = d[b][a] = t.edge_length(e);
    }
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) EXPECT_NEAR(t.distance(t.vertex(i), t.vertex(j)), d[i][j], 1e-12);
    // points inside edges: boundary offsets plus the vertex path
    for (int k = 0; k < 20 && n > 1; ++k) {
      const int e1 = testing::draw_int(rng, 0, n - 2), e2 = testing::draw_int(rng, 0, n - 2);
      const double s1 = rng.uniform(0, t.edge_length(e1)), s2 = rng.uniform(0, t.edge_length(e2));
      const int a1 = t.edge_parent(e1), b1 = t.edge_child(e1), a2 = t.edge_parent(e2), b2 = t.edge_child(e2);
      const Point p = t.on_edge(t.vertex_name(a1), t.vertex_name(b1), s1);
      const Point q = t.on_edge(t.vertex_name(a2), t.vertex_name(b2), s2);
      double want;
      if (e1 == e2) {
        want = std::abs(s1 - s2);
      } else {
        const double l1 = t.edge_length(e1), l2 = t.edge_length(e2);
        want = std::min({s1 + d[a1][a2] + s2, s1 + d[a1][b2] + l2 - s2, l1 - s1 + d[b1][a2] + s2,
                         l1 - s1 + d[b1][b2] + l2 - s2});
      }
      EXPECT_NEAR(t.distance(p, q), want, 1e-12);
    }
  }
}

TEST(HullProbe, Examples) {
  EuclideanSpace e(2);
  const std::vector<Point> seg{e.make({0, 0}), e.make({1, 0})};
  for (double d : convex_hull_diameter_probe(e, seg, 4, 16, 1)) EXPECT_EQ(d, 1.0);
  const std::vector<Point> single{e.make({2, 3})};
  for (double d : convex_hull_diameter_probe(e, single, 3, 8, 1)) EXPECT_EQ(d, 0.0);
  const MetricTree t = MetricTree::tripod(1.0);
  const std::vector<Point> ends{t.vertex("x"), t.vertex("y"), t.vertex("z")};
  const auto diams = convex_hull_diameter_probe(t, ends, 3, 32, 2);
  ASSERT_EQ(diams.size(), 4u);
  EXPECT_DOUBLE_EQ(diams[0], 2.0);
  for (std::size_t i = 1; i < diams.size(); ++i) EXPECT_LE(diams[i], diams[i - 1] + 1e-9);
  EXPECT_THROW(convex_hull_diameter_probe(e, std::vector<Point>{}, 2, 4, 1), DomainError);
  EXPECT_THROW(convex_hull_diameter_probe(e, seg, 0, 4, 1), DomainError);
}

TEST(HullProbe, DeterministicInSeed) {
  HalfPlaneSpace h;
  CounterRng rng(3);
  const auto pts = testing::random_points(h, rng, 4);
  EXPECT_EQ(convex_hull_diameter_probe(h, pts, 3, 16, 42), convex_hull_diameter_probe(h, pts, 3, 16, 42));
}

}  // namespace
}  // namespace busemann
