// Acceptance suite: one criterion per invocation (argument 1..13, or "all").
// Prints one PASS/FAIL line per criterion; exit status 0 iff all selected pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "busemann/barycenter.hpp"
#include "busemann/ergodic.hpp"
#include "busemann/hull_probe.hpp"
#include "busemann/isometry.hpp"
#include "busemann/transport.hpp"
#include "support/generators.hpp"

namespace busemann {
namespace {

using testing::draw;
using testing::draw_int;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Worst {
  double value = -std::numeric_limits<double>::infinity();
  void see(double v) { value = std::max(value, v); }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const MetricTree kTripod = MetricTree::tripod(1.0);

MetricTree fixed_tree() {
  CounterRng rng(2024);
  return testing::random_tree(rng, 8);
}

double dist_to_x(const Point& p) { return kTripod.distance(p, kTripod.vertex("x")); }

FiniteFamily tripod_family(const std::string& names) {
  std::vector<Point> pts;
  for (char c : names) pts.push_back(kTripod.vertex(std::string(1, c)));
  return FiniteFamily(pts);
}

RationalMeasure uneven_tripod_measure() {
  return RationalMeasure({{kTripod.vertex("x"), Fraction(1, 2)},
                          {kTripod.vertex("y"), Fraction(1, 4)},
                          {kTripod.vertex("z"), Fraction(1, 4)}});
}

Point weighted_mean(const EuclideanSpace& e, const RationalMeasure& mu) {
  std::vector<double> m(static_cast<std::size_t>(e.dim()), 0.0);
  for (const auto& a : mu.atoms()) {
    const auto x = testing::coords(a.point);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += boost::rational_cast<double>(a.weight) * x[i];
  }
  return e.make(m);
}

// 1. Tripod bar_4(x,x,y,z) at 7/9 from x.
Outcome c1() {
  const double got = dist_to_x(bar_n(kTripod, tripod_family("xxyz"), 1e-9).point);
  const double want = 7.0 / 9.0;
  return {std::abs(got - want) <= 1e-6, "measured " + fmt(got) + ", expected " + fmt(want) + " +- 1e-6"};
}

// 2. Tripod bar_8 of the doubled family at 2533/3150 from x; bar_4 and bar_8 separated.
Outcome c2() {
  const Point b4 = bar_n(kTripod, tripod_family("xxyz"), 1e-9).point;
  const Point b8 = bar_n(kTripod, tripod_family("xxxxyyzz"), 1e-9).point;
  const double got = dist_to_x(b8), want = 2533.0 / 3150.0, sep = kTripod.distance(b4, b8);
  const bool value_ok = std::abs(got - want) <= 1e-6, sep_ok = sep >= 1e-3;
  return {value_ok && sep_ok, "measured " + fmt(got) + ", expected " + fmt(want) + " +- 1e-6 (" +
                                  (value_ok ? "ok" : "off") + "); separation " + fmt(sep) + " >= 1e-3 (" +
                                  (sep_ok ? "ok" : "off") + ")"};
}

// Margin below the large-k offset of bar* from the center (0.1502 at k = 128,
// remaining doubling gaps summing to under 2e-4).
constexpr double kCenterMargin = 0.14;

// 3. Cartan barycenter at the center; bar* strictly inside the x-edge.
Outcome c3() {
  const auto mu = uneven_tripod_measure();
  const double cartan = kTripod.distance(cartan_barycenter(kTripod, mu, 1e-12), kTripod.vertex("o"));
  BarStarOptions opts;
  opts.stop_on_small_gap = false;
  const auto r = bar_star(kTripod, mu, 1e-6, opts);
  const double offset = kTripod.distance(r.point, kTripod.vertex("o"));
  const bool on_x_edge = std::abs(offset + dist_to_x(r.point) - 1.0) <= 1e-12;
  return {cartan <= 1e-8 && offset > kCenterMargin && on_x_edge,
          "cartan distance to center " + fmt(cartan) + "; bar* offset " + fmt(offset) + " > " + fmt(kCenterMargin) +
              " at k=" + std::to_string(r.replication_level) + (on_x_edge ? ", on x-edge" : ", off x-edge")};
}

// 4. Normed space: bar_n is the arithmetic mean and bar* the weighted mean.
Outcome c4() {
  CounterRng rng(4001);
  Worst fam, meas;
  for (int t = 0; t < 200; ++t) {
    EuclideanSpace e(draw_int(rng, 1, 4));
    const int n = draw_int(rng, 1, 6);
    const auto pts = testing::random_points(e, rng, n);
    const Point mean = weighted_mean(e, RationalMeasure::uniform(FiniteFamily(pts)));
    fam.see(e.distance(bar_n(e, FiniteFamily(pts), 1e-8).point, mean));
  }
  BarStarOptions opts;
  opts.work_budget = 20'000'000;
  for (int t = 0; t < 200; ++t) {
    EuclideanSpace e(draw_int(rng, 1, 4));
    const auto mu = testing::random_measure(e, rng, 3, 6);
    meas.see(e.distance(bar_star(e, mu, 1e-6, opts).point, weighted_mean(e, mu)));
  }
  return {fam.value <= 1e-7 && meas.value <= 1e-6,
          "max d(bar_n, mean) " + fmt(fam.value) + " <= 1e-7; max d(bar*, weighted mean) " + fmt(meas.value) +
              " <= 1e-6"};
}

// Per-space suites. Curved and non-collinear spaces run at small sizes: the
// leave-one-out recursion is exponential in the number of points.
struct SpaceCase {
  std::string name;
  const GeodesicSpace* space;
  std::function<Point(CounterRng&)> point;
  std::function<RationalMeasure(CounterRng&, int, int)> measure;  // (max_atoms, q)
  int max_den;       // largest common expansion size for paired measures
  int max_atoms;
  int family_max;    // largest family size for the bar_n suites
  int max_replication;
};

std::vector<SpaceCase> roster(const EuclideanSpace& e, const MetricTree& tree, const HalfPlaneSpace& h) {
  auto make = [](const std::string& name, const auto& s, int max_den, int max_atoms, int family_max, int max_rep) {
    return SpaceCase{name,
                     &s,
                     [&s](CounterRng& r) { return testing::random_point(s, r); },
                     [&s](CounterRng& r, int a, int q) { return testing::random_measure_over(s, r, a, q); },
                     max_den,
                     max_atoms,
                     family_max,
                     max_rep};
  };
  return {make("euclidean", e, 6, 3, 5, 1), make("tripod", kTripod, 12, 3, 8, 4), make("tree", tree, 12, 4, 8, 4),
          make("halfplane", h, 6, 3, 4, 1)};
}

// Same expansion size and fixed level for both measures.
BarStarOptions level_options(const SpaceCase& sc, std::int64_t q) {
  BarStarOptions o;
  o.expansion_size = q;
  o.max_replication = sc.max_replication;
  o.stop_on_small_gap = false;
  o.box_budget = 50'000'000;
  return o;
}

// 5. d(bar*(mu1), bar*(mu2)) <= W1(mu1, mu2), W1 checked against brute force.
Outcome c5() {
  EuclideanSpace e(2);
  HalfPlaneSpace h;
  const MetricTree tree = fixed_tree();
  Outcome out;
  CounterRng rng(5001);
  for (const auto& sc : roster(e, tree, h)) {
    Worst excess, solver_gap;
    int brute = 0;
    for (int t = 0; t < 200; ++t) {
      const int q = draw_int(rng, 1, sc.max_den);
      const auto mu1 = sc.measure(rng, sc.max_atoms, q), mu2 = sc.measure(rng, sc.max_atoms, q);
      const double w = w1(*sc.space, mu1, mu2);
      if (joint_denominator(mu1, mu2) <= 8) {
        solver_gap.see(std::abs(w - w1_bruteforce(*sc.space, mu1, mu2)));
        ++brute;
      }
      const auto opts = level_options(sc, q);
      const double d = sc.space->distance(bar_star(*sc.space, mu1, 1e-8, opts).point,
                                          bar_star(*sc.space, mu2, 1e-8, opts).point);
      excess.see(d - w);
    }
    const bool ok = excess.value <= 1e-6 && solver_gap.value <= 1e-12;
    out.pass = out.pass && ok;
    out.detail += sc.name + ": max excess " + fmt(excess.value) + ", w1 vs brute force " + fmt(solver_gap.value) +
                  " on " + std::to_string(brute) + "; ";
  }
  return out;
}

// 6. Contraction of bar_n and the leave-l-out mean bound.
Outcome c6() {
  EuclideanSpace e(2);
  HalfPlaneSpace h;
  const MetricTree tree = fixed_tree();
  Outcome out;
  CounterRng rng(6001);
  for (const auto& sc : roster(e, tree, h)) {
    Worst contraction, leave_out;
    for (int t = 0; t < 200; ++t) {
      const int n = draw_int(rng, 2, sc.family_max);
      std::vector<Point> xs, ys;
      for (int i = 0; i < n; ++i) xs.push_back(sc.point(rng)), ys.push_back(sc.point(rng));
      contraction.see(-contraction_round_check(*sc.space, FiniteFamily(xs), FiniteFamily(ys), 1e-9).slack());
    }
    for (int t = 0; t < 200; ++t) {
      const int n = draw_int(rng, 2, std::min(sc.family_max, 6));
      std::vector<Point> xs;
      for (int i = 0; i < n; ++i) xs.push_back(sc.point(rng));
      const int l = draw_int(rng, 1, n - 1);
      leave_out.see(-leave_l_out_mean_bound_check(*sc.space, sc.point(rng), FiniteFamily(xs), l, 1e-9).slack());
    }
    const bool ok = contraction.value <= 1e-6 && leave_out.value <= 1e-6;
    out.pass = out.pass && ok;
    out.detail += sc.name + ": worst slack " + fmt(-contraction.value) + " / " + fmt(-leave_out.value) + "; ";
  }
  return out;
}

// 7. Replication gaps: doubling gaps from bar* reports and k -> k + l probes.
Outcome c7() {
  EuclideanSpace e(2);
  HalfPlaneSpace h;
  const MetricTree tree = fixed_tree();
  Outcome out;
  CounterRng rng(7001);
  for (const auto& sc : roster(e, tree, h)) {
    const bool curved = sc.max_replication == 1;
    Worst excess;
    int gaps = 0;
    for (int t = 0; t < 30; ++t) {
      const int q = draw_int(rng, 2, curved ? 3 : 4);
      const auto mu = sc.measure(rng, sc.max_atoms, q);
      BarStarOptions o;
      o.stop_on_small_gap = false;
      o.max_replication = curved ? 2 : 16;
      const auto r = bar_star(*sc.space, mu, 1e-8, o);
      for (std::size_t i = 0; i < r.cauchy_gaps.size(); ++i, ++gaps)
        excess.see(r.cauchy_gaps[i] - r.initial_diameter);  // l = k
      const std::vector<std::pair<int, int>> probes =
          curved ? std::vector<std::pair<int, int>>{{1, 1}}
                 : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {4, 1}, {4, 3}};
      for (auto [k, l] : probes) {
        const auto g = replication_gap(*sc.space, mu, k, l, 1e-8);
        excess.see(g.gap - g.bound);
        ++gaps;
      }
    }
    out.pass = out.pass && excess.value <= 1e-6;
    out.detail += sc.name + ": " + std::to_string(gaps) + " gaps, max excess " + fmt(excess.value) + "; ";
  }
  return out;
}

// 8. Sampled hull diameters never increase.
Outcome c8() {
  EuclideanSpace e(3);
  HalfPlaneSpace h;
  const MetricTree tree = fixed_tree();
  Outcome out;
  CounterRng rng(8001);
  for (const auto& sc : roster(e, tree, h)) {
    Worst rise;
    for (int t = 0; t < 50; ++t) {
      std::vector<Point> b;
      for (int i = draw_int(rng, 1, 6); i > 0; --i) b.push_back(sc.point(rng));
      const auto d = convex_hull_diameter_probe(*sc.space, b, 4, 32, rng.next_u64());
      for (std::size_t i = 1; i < d.size(); ++i) rise.see(d[i] - d[i - 1]);
    }
    out.pass = out.pass && rise.value <= 1e-9;
    out.detail += sc.name + ": max rise " + fmt(rise.value) + "; ";
  }
  return out;
}

// 9. Real-valued observable: ergodic average equals the Birkhoff average.
Outcome c9() {
  EuclideanSpace line(1);
  const auto sys = DynamicalSystem::golden_rotation();
  const auto phi = Observable::identity(line);
  CounterRng rng(9001);
  Worst gap, to_half;
  for (int t = 0; t < 50; ++t) {
    const State w = sys.sample(rng);
    for (int n = 1; n <= 256; ++n) {
      const double b = birkhoff_average(sys, phi, w, n);
      gap.see(std::abs(testing::coords(ergodic_average(sys, phi, w, n, 1e-10).point)[0] - b));
      if (n == 256) to_half.see(std::abs(b - 0.5));
    }
  }
  return {gap.value <= 1e-9 && to_half.value < 0.02,
          "max |ergodic - birkhoff| " + fmt(gap.value) + " <= 1e-9; max |birkhoff_256 - 1/2| " + fmt(to_half.value) +
              " < 0.02"};
}

// 10. Finite-valued tripod observable: n = 256 closer to the cell limit than n = 16.
Outcome c10() {
  const auto sys = DynamicalSystem::golden_rotation();
  const auto phi = Observable::finite_valued(kTripod, {Fraction(0), Fraction(1, 2), Fraction(5, 6), Fraction(1)},
                                             {kTripod.vertex("x"), kTripod.vertex("y"), kTripod.vertex("z")});
  const double tol = 1e-6;
  BarStarOptions lim;
  lim.stop_on_small_gap = false;
  const Point limit = bar_star(kTripod, cell_limit_measure(sys, phi), tol, lim).point;
  BarStarOptions opts;
  opts.box_budget = 1'000'000;
  CounterRng rng(10001);
  int improved = 0;
  Worst far;
  for (int t = 0; t < 50; ++t) {
    const State w = sys.sample(rng);
    const double d16 = kTripod.distance(ergodic_average(sys, phi, w, 16, tol, opts).point, limit);
    const double d256 = kTripod.distance(ergodic_average(sys, phi, w, 256, tol, opts).point, limit);
    improved += d256 < d16;
    far.see(d256);
  }
  return {improved >= 45 && far.value < 0.05, std::to_string(improved) + "/50 improved (need 45); max distance at 256 " +
                                                   fmt(far.value) + " < 0.05"};
}

// 11. Box windows are tempered.
Outcome c11() {
  const double cz = temperedness_check(Group::Z, 256).c_observed;
  const double cz2 = temperedness_check(Group::Z2, 16).c_observed;
  return {cz <= 2.0 && cz2 <= 4.0, "Z: C " + fmt(cz) + " <= 2; Z^2: C " + fmt(cz2) + " <= 4"};
}

// 12. Barycenters of orbit measures are fixed by the group.
Outcome c12() {
  const std::vector<Isometry> rot3{tree_automorphism(kTripod, {0, 1, 2, 3}), tree_automorphism(kTripod, {0, 2, 3, 1}),
                                   tree_automorphism(kTripod, {0, 3, 1, 2})};
  CounterRng rng(12001);
  Worst tree_move, plane_move;
  for (int t = 0; t < 20; ++t) {
    const Point p = testing::random_point(kTripod, rng);
    const Point b = bar_star(kTripod, orbit_measure(p, rot3), 1e-10).point;
    for (const auto& g : rot3) tree_move.see(kTripod.distance(g(b), b));
  }
  EuclideanSpace e(2);
  BarStarOptions once;
  once.max_replication = 1;
  for (int t = 0; t < 20; ++t) {
    const int order = draw_int(rng, 3, 5);
    const std::vector<double> c{draw(rng, -1, 1), draw(rng, -1, 1)};
    std::vector<Isometry> group;
    for (int j = 0; j < order; ++j) group.push_back(planar_rotation(e, 2 * std::numbers::pi * j / order, c));
    const Point b = bar_star(e, orbit_measure(testing::random_point(e, rng), group), 1e-10, once).point;
    for (const auto& g : group) plane_move.see(e.distance(g(b), b));
  }
  return {tree_move.value <= 1e-8 && plane_move.value <= 1e-8,
          "tripod rotations move bar* by " + fmt(tree_move.value) + "; planar rotations by " + fmt(plane_move.value)};
}

// 13. bar* commutes with isometries.
Outcome c13() {
  CounterRng rng(13001);
  Outcome out;
  const double tol = 1e-8;
  auto run = [&](const std::string& name, const GeodesicSpace& s, auto measure, auto isometry, BarStarOptions o) {
    Worst err;
    for (int t = 0; t < 100; ++t) {
      const RationalMeasure mu = measure();
      const Isometry g = isometry();
      err.see(s.distance(bar_star(s, pushforward(mu, g), tol, o).point, g(bar_star(s, mu, tol, o).point)));
    }
    out.pass = out.pass && err.value <= 1e-6;
    out.detail += name + ": max " + fmt(err.value) + "; ";
  };
  BarStarOptions once;
  once.max_replication = 1;
  EuclideanSpace e(2);
  run("euclidean", e, [&] { return testing::random_measure(e, rng, 3, 6); },
      [&] {
        const double a = draw(rng, 0, 2 * std::numbers::pi), s = draw_int(rng, 0, 1) ? 1.0 : -1.0;
        return euclidean_motion(e, {std::cos(a), -s * std::sin(a), std::sin(a), s * std::cos(a)},
                                {draw(rng, -2, 2), draw(rng, -2, 2)});
      },
      once);
  BarStarOptions fixed;
  fixed.max_replication = 8;
  fixed.stop_on_small_gap = false;
  run("tripod", kTripod, [&] { return testing::random_measure(kTripod, rng, 4, 8); },
      [&] {
        std::vector<int> perm{0};
        for (int i : testing::random_permutation(rng, 3)) perm.push_back(i + 1);
        return tree_automorphism(kTripod, perm);
      },
      fixed);
  HalfPlaneSpace h;
  run("halfplane", h, [&] { return testing::random_measure(h, rng, 3, 6); },
      [&]() -> Isometry {
        const double a = std::exp(draw(rng, -0.5, 0.5)), b = draw(rng, -1, 1), c = draw(rng, -0.5, 0.5);
        const Isometry m = mobius(h, a, b, c, (1 + b * c) / a);
        if (draw_int(rng, 0, 1)) return m;
        const Isometry r = halfplane_reflection(h);
        return [m, r](const Point& p) { return r(m(p)); };
      },
      once);
  return out;
}

struct Criterion {
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"tripod bar_4 distance", c1},   {"tripod bar_8 distance", c2},   {"cartan vs bar* on tripod", c3},
    {"normed-space mean", c4},       {"1-lipschitz", c5},             {"contraction and leave-l-out", c6},
    {"replication gap bound", c7},   {"hull diameter probe", c8},     {"birkhoff reduction", c9},
    {"finite-valued convergence", c10}, {"temperedness", c11},         {"orbit fixed point", c12},
    {"isometry equivariance", c13},
};

}  // namespace
}  // namespace busemann

int main(int argc, char** argv) {
  using namespace busemann;
  std::vector<int> selected;
  const std::string arg = argc > 1 ? argv[1] : "all";
  if (arg == "all") {
    for (int i = 1; i <= 13; ++i) selected.push_back(i);
  } else {
    const int i = std::atoi(arg.c_str());
    if (i < 1 || i > 13) {
      std::fprintf(stderr, "usage: %s [1..13|all]\n", argv[0]);
      return 2;
    }
    selected.push_back(i);
  }
  bool all = true;
  for (int i : selected) {
    const auto& c = kCriteria[i - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %-28s %s  %s [%.1fs]\n", i, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
