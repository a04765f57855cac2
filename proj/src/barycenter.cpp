#include "busemann/barycenter.hpp"

#include <algorithm>
#include <cmath>

#include "busemann/errors.hpp"
#include "busemann/euclidean.hpp"
#include "busemann/metric_tree.hpp"

namespace busemann {

namespace {

void require_tol(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
}

void validate_family(const GeodesicSpace& space, const FiniteFamily& family) {
  for (const Point& p : family.points()) space.validate(p);
}

std::vector<Point> atom_points(const RationalMeasure& measure) {
  std::vector<Point> pts;
  for (const auto& a : measure.atoms()) pts.push_back(a.point);
  return pts;
}

Multiset scaled(Multiset m, int k) {
  for (int& c : m.counts) c *= k;
  return m;
}

Point tree_cartan(const MetricTree& tree, const RationalMeasure& measure, double tol) {
  struct Term {
    double w;
    const TreePoint* p;
  };
  std::vector<Term> terms;
  for (const auto& a : measure.atoms())
    terms.push_back({boost::rational_cast<double>(a.weight), &std::get<TreePoint>(a.point)});

  Point best = tree.vertex(0);
  double best_f = 0.0;
  for (const Term& t : terms) best_f += t.w * std::pow(tree.distance(best, *t.p), 2);

  for (std::size_t e = 0; e < tree.edge_count(); ++e) {
    const int edge = static_cast<int>(e);
    const double len = tree.edge_length(edge);
    const Point top = tree.vertex(tree.edge_parent(edge));
    const Point bottom = tree.vertex(tree.edge_child(edge));
    // Signed distance profile of each atom along the edge: d(s) = base + dir * s.
    struct Profile {
      double w;
      bool on_edge;
      double pos;  // offset of an on-edge atom
      double base;
      double dir;
    };
    std::vector<Profile> prof;
    for (const Term& t : terms) {
      if (t.p->edge == edge) {
        prof.push_back({t.w, true, t.p->offset, 0.0, 0.0});
        continue;
      }
      const double du = tree.distance(top, *t.p);
      const double dv = tree.distance(bottom, *t.p);
      if (dv < du)
        prof.push_back({t.w, false, 0.0, dv + len, -1.0});
      else
        prof.push_back({t.w, false, 0.0, du, 1.0});
    }
    auto slope = [&](double s, bool right) {
      double g = 0.0;
      for (const Profile& q : prof) {
        if (q.on_edge) {
          const double diff = s - q.pos;
          const double sign = diff > 0.0 || (diff == 0.0 && right) ? 1.0 : -1.0;
          g += 2.0 * q.w * std::abs(diff) * sign;
        } else {
          g += 2.0 * q.w * (q.base + q.dir * s) * q.dir;
        }
      }
      return g;
    };
    double s;
    if (slope(0.0, true) >= 0.0) {
      s = 0.0;
    } else if (slope(len, false) <= 0.0) {
      s = len;
    } else {
      double lo = 0.0, hi = len;
      for (int it = 0; it < 200 && hi - lo > 1e-3 * tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (slope(mid, true) < 0.0 ? lo : hi) = mid;
      }
      s = 0.5 * (lo + hi);
    }
    const Point cand = tree.canonical(TreePoint{edge, s});
    double f = 0.0;
    for (const Term& t : terms) f += t.w * std::pow(tree.distance(cand, *t.p), 2);
    if (f < best_f) {
      best_f = f;
      best = cand;
    }
  }
  return best;
}

}  // namespace

std::uint64_t box_size(const std::vector<int>& counts) {
  std::uint64_t b = 1;
  for (int c : counts) {
    b *= static_cast<std::uint64_t>(c + 1);
    if (b > (std::uint64_t{1} << 62)) return b;
  }
  return b;
}

BarycenterReport bar_n(const GeodesicSpace& space, const FiniteFamily& family, double tol,
                       const EngineOptions& options) {
  require_tol(tol);
  validate_family(space, family);
  const Multiset m = to_multiset(family);
  BarycenterEngine engine(space, options);
  BarycenterReport r;
  r.point = engine.solve(m, tol);
  r.rounds_per_level = {engine.stats().top_rounds};
  r.tolerance_used = tol;
  r.initial_diameter = space.diameter(m.atoms);
  r.base_size = r.total_size = static_cast<std::int64_t>(family.size());
  r.work = engine.stats().work;
  if (m.atoms.size() == 1) r.stop_reason = "single_atom";
  return r;
}

FiniteFamily leave_one_out_round(const GeodesicSpace& space, const FiniteFamily& family, double tol,
                                 const EngineOptions& options) {
  require_tol(tol);
  validate_family(space, family);
  const Multiset m = to_multiset(family);
  if (m.atoms.size() == 1) return family;
  BarycenterEngine engine(space, options);
  const std::vector<Point> vals = engine.leave_one_out(m, tol);
  std::vector<Point> out;
  for (const Point& p : family.points()) {
    const auto it = std::lower_bound(m.atoms.begin(), m.atoms.end(), p);
    out.push_back(vals[static_cast<std::size_t>(it - m.atoms.begin())]);
  }
  return FiniteFamily(std::move(out));
}

BarycenterReport bar_star(const GeodesicSpace& space, const RationalMeasure& measure, double tol,
                          const BarStarOptions& options) {
  require_tol(tol);
  measure.validate(space);
  const std::int64_t den = measure.common_denominator();
  if (den > options.denominator_cap)
    throw ResourceError("common denominator " + std::to_string(den) + " exceeds the cap of " +
                        std::to_string(options.denominator_cap));
  std::int64_t n = den;
  if (options.expansion_size != 0) {
    if (options.expansion_size % den != 0)
      throw DomainError("expansion size must be a multiple of the common denominator");
    n = options.expansion_size;
  }

  BarycenterReport r;
  r.tolerance_used = tol;
  r.base_size = r.total_size = n;
  const std::vector<Point> atoms = atom_points(measure);
  if (atoms.size() == 1) {
    r.point = atoms[0];
    r.stop_reason = "single_atom";
    return r;
  }
  r.initial_diameter = space.diameter(atoms);
  r.tail_estimate = r.initial_diameter;

  EngineOptions eo = options.engine;
  eo.work_budget = options.work_budget;
  BarycenterEngine engine(space, eo);
  const Multiset base = measure.expand(n);

  // On one geodesic every level equals the weighted mean of arclength coordinates.
  if (eo.geodesic_fast_path && space.chart(atoms, 1e-13 * std::max(1.0, r.initial_diameter))) {
    r.point = engine.solve(base, tol);
    r.rounds_per_level = {engine.stats().top_rounds};
    r.stop_reason = "geodesic";
    r.work = engine.stats().work;
    return r;
  }

  r.converged = false;
  for (int k = 1;; k *= 2) {
    const Multiset level = scaled(base, k);
    if (k > 1 && box_size(level.counts) > options.box_budget) {
      r.stop_reason = "box_budget";
      break;
    }
    Point p;
    try {
      p = engine.solve(level, 0.5 * tol);
    } catch (const ResourceError&) {
      if (k == 1) throw;
      r.stop_reason = "work_budget";
      break;
    }
    r.rounds_per_level.push_back(engine.stats().top_rounds);
    if (k > 1) r.cauchy_gaps.push_back(space.distance(r.point, p));
    r.point = std::move(p);
    r.replication_level = k;
    r.total_size = n * k;
    r.tail_estimate = r.initial_diameter / k;
    if (r.tail_estimate < 0.5 * tol) {
      r.converged = true;
      r.stop_reason = "converged";
      break;
    }
    if (options.stop_on_small_gap && !r.cauchy_gaps.empty() && r.cauchy_gaps.back() < 0.5 * tol) {
      r.converged = true;
      r.stop_reason = "gap";
      break;
    }
    if (2 * k > options.max_replication) {
      r.stop_reason = "max_replication";
      break;
    }
  }
  r.work = engine.stats().work;
  return r;
}

BoundCheck leave_l_out_mean_bound_check(const GeodesicSpace& space, const Point& x, const FiniteFamily& family,
                                        int l, double tol, const EngineOptions& options) {
  require_tol(tol);
  space.validate(x);
  const int n = static_cast<int>(family.size());
  if (l < 1 || l >= n) throw DomainError("deletion count must satisfy 1 <= l < n");
  if (n > 20) throw DomainError("leave-l-out enumeration supports at most 20 points");
  BoundCheck out;
  out.lhs = space.distance(x, bar_n(space, family, tol, options).point);
  // Each l-subset arises from l! ordered deletions, so the subset mean is the same.
  double sum = 0.0;
  long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != l) continue;
    std::vector<Point> kept;
    for (int i = 0; i < n; ++i)
      if (!(mask & (1u << i))) kept.push_back(family[static_cast<std::size_t>(i)]);
    sum += space.distance(x, bar_n(space, FiniteFamily(std::move(kept)), tol, options).point);
    ++count;
  }
  out.rhs = sum / static_cast<double>(count);
  return out;
}

BoundCheck contraction_round_check(const GeodesicSpace& space, const FiniteFamily& x, const FiniteFamily& y,
                                   double tol, const EngineOptions& options) {
  require_tol(tol);
  if (x.size() != y.size()) throw DomainError("contraction check needs families of equal length");
  BoundCheck out;
  out.lhs = space.distance(bar_n(space, x, tol, options).point, bar_n(space, y, tol, options).point);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += space.distance(x[i], y[i]);
  out.rhs = sum / static_cast<double>(x.size());
  return out;
}

ReplicationGap replication_gap(const GeodesicSpace& space, const RationalMeasure& measure, int k, int l, double tol,
                               const EngineOptions& options) {
  require_tol(tol);
  if (k < 1 || l < 1) throw DomainError("replication levels must be >= 1");
  measure.validate(space);
  const Multiset base = measure.expand(measure.common_denominator());
  BarycenterEngine engine(space, options);
  const Point a = engine.solve(scaled(base, k), tol);
  const Point b = engine.solve(scaled(base, k + l), tol);
  ReplicationGap g;
  g.k = k;
  g.l = l;
  g.gap = space.distance(a, b);
  g.bound = space.diameter(atom_points(measure)) * l / k;
  return g;
}

Point cartan_barycenter(const GeodesicSpace& space, const RationalMeasure& measure, double tol) {
  require_tol(tol);
  measure.validate(space);
  if (const auto* e = dynamic_cast<const EuclideanSpace*>(&space)) {
    Coords mean(e->dim(), 0.0);
    for (const auto& a : measure.atoms()) {
      const double w = boost::rational_cast<double>(a.weight);
      const auto& x = std::get<EuclideanPoint>(a.point).x;
      for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += w * x[i];
    }
    return EuclideanPoint{std::move(mean)};
  }
  if (const auto* t = dynamic_cast<const MetricTree*>(&space)) return tree_cartan(*t, measure, tol);
  throw UnsupportedError("cartan barycenter is implemented for euclidean spaces and metric trees only");
}

}  // namespace busemann
