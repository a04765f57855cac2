#include "busemann/engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "busemann/errors.hpp"

namespace busemann {

BarycenterEngine::BarycenterEngine(const GeodesicSpace& space, EngineOptions options)
    : space_(space), options_(options) {}

void BarycenterEngine::charge(std::uint64_t units) {
  stats_.work += units;
  if (options_.work_budget != 0 && stats_.work > options_.work_budget)
    throw ResourceError("barycenter work budget of " + std::to_string(options_.work_budget) + " units exhausted");
}

Point BarycenterEngine::midpoint(const Point& a, const Point& b) {
  charge(1);
  return space_.midpoint(a, b);
}

double BarycenterEngine::diameter(const std::vector<Point>& pts) {
  charge(pts.size() * (pts.size() - 1) / 2);
  return space_.diameter(pts);
}

bool BarycenterEngine::try_chart(const std::vector<Point>& pts, SegmentChart& out) {
  if (!options_.geodesic_fast_path) return false;
  charge(4 * pts.size());
  auto c = space_.chart(pts, slack_);
  if (!c) return false;
  out = std::move(*c);
  ++stats_.fast_path_hits;
  return true;
}

Point BarycenterEngine::closed_form(const SegmentChart& chart, const std::vector<int>& counts, int total) const {
  if (chart.length == 0.0) return chart.start;
  double s = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) s += counts[i] * chart.coords[i];
  const double t = std::clamp(s / total / chart.length, 0.0, 1.0);
  return space_.geodesic_point(chart.start, chart.end, t);
}

void BarycenterEngine::set_scale(const std::vector<Point>& atoms) {
  const double d = std::max(1.0, space_.diameter(atoms));
  floor_ = 1e-14 * d;
  slack_ = 1e-13 * d;
}

Point BarycenterEngine::solve(const Multiset& family, double tol) {
  if (!(tol > 0.0)) throw DomainError("barycenter tolerance must be positive");
  if (family.atoms.empty()) throw DomainError("barycenter of an empty family");
  for (const Point& p : family.atoms) space_.validate(p);
  Multiset m = canonical_multiset(family.atoms, family.counts);
  set_scale(m.atoms);
  stats_.top_rounds = 0;
  return finish(std::move(m), std::max(tol, floor_), 0);
}

std::vector<Point> BarycenterEngine::leave_one_out(const Multiset& family, double tol) {
  if (!(tol > 0.0)) throw DomainError("barycenter tolerance must be positive");
  if (family.total() < 3) throw DomainError("leave-one-out round needs at least 3 points");
  for (const Point& p : family.atoms) space_.validate(p);
  set_scale(family.atoms);
  return round(family, std::max(tol, floor_), 1);
}

Point BarycenterEngine::finish(Multiset w, double eta, int depth) {
  double budget = 0.5 * eta;
  int rounds = 0;
  while (true) {
    if (w.atoms.size() == 1) break;
    const int n = w.total();
    if (n == 2) return midpoint(w.atoms[0], w.atoms[1]);
    SegmentChart chart;
    if (try_chart(w.atoms, chart)) return closed_form(chart, w.counts, n);
    const double delta = diameter(w.atoms);
    if (delta <= 0.5 * eta) break;
    if (++rounds > options_.max_rounds)
      throw ResourceError("leave-one-out rounds did not contract within " + std::to_string(options_.max_rounds) +
                          " rounds");
    // Diameter shrinks by at least 1/(n - 1) per round, up to sub-call error.
    // Round r gets a share of the remaining budget proportional to the square
    // root of its predicted diameter, so wide early rounds are not starved.
    const double est = std::max(1.0, std::ceil(std::log(2.0 * delta / eta) / std::log(n - 1.0)));
    const double q = 1.0 / std::sqrt(n - 1.0);
    const double share = (1.0 - q) / (1.0 - std::pow(q, est + 1.0));
    const double tau = std::max(budget * share, floor_);
    budget = std::max(0.0, budget - tau);
    std::vector<Point> next = round(w, tau, depth + 1);
    w = canonical_multiset(std::move(next), std::move(w.counts));
    if (depth == 0) stats_.top_rounds = rounds;
  }
  return w.atoms[0];
}

std::vector<Point> BarycenterEngine::round(const Multiset& p, double tau, int depth) {
  const std::size_t m = p.atoms.size();
  const int n = p.total();
  if (m == 1) return {p.atoms[0]};

  SegmentChart chart;
  if (try_chart(p.atoms, chart)) {
    std::vector<Point> out;
    std::vector<int> c = p.counts;
    for (std::size_t j = 0; j < m; ++j) {
      --c[j];
      out.push_back(closed_form(chart, c, n - 1));
      ++c[j];
    }
    return out;
  }
  if (diameter(p.atoms) <= tau) return std::vector<Point>(m, p.atoms[0]);

  // Dense index over the first m - 1 counts; the last is implied by the layer.
  std::vector<std::uint64_t> stride(m, 1);
  std::uint64_t box = 1;
  for (std::size_t j = 0; j < m; ++j) {
    if (j + 1 < m) stride[j + 1] = stride[j] * static_cast<std::uint64_t>(p.counts[j] + 1);
    box *= static_cast<std::uint64_t>(p.counts[j] + 1);
    if (box > options_.box_budget)
      throw ResourceError("leave-one-out pass would visit more than " + std::to_string(options_.box_budget) +
                          " sub-multisets");
  }
  const std::size_t slots = static_cast<std::size_t>(stride[m - 1]);
  std::vector<int> suffix(m + 1, 0);
  for (std::size_t j = m; j-- > 0;) suffix[j] = suffix[j + 1] + p.counts[j];

  const double eta = std::max(tau / std::max(1, n - 3), floor_);
  std::vector<Point> prev(slots), cur(slots);
  std::vector<int> v(m, 0);
  std::vector<Point> kids;
  std::vector<int> kid_counts;

  // Calls visit(index) for every v <= counts with |v| == layer.
  std::function<void(std::size_t, int, std::size_t, const std::function<void(std::size_t)>&)> walk =
      [&](std::size_t j, int left, std::size_t idx, const std::function<void(std::size_t)>& visit) {
        if (j + 1 == m) {
          if (left > p.counts[j]) return;
          v[j] = left;
          visit(idx);
          return;
        }
        const int lo = std::max(0, left - suffix[j + 1]);
        const int hi = std::min(p.counts[j], left);
        for (int a = lo; a <= hi; ++a) {
          v[j] = a;
          walk(j + 1, left - a, idx + static_cast<std::size_t>(a) * stride[j], visit);
        }
      };

  for (int layer = 1; layer < n; ++layer) {
    walk(0, layer, 0, [&](std::size_t idx) {
      ++stats_.nodes;
      charge(1);
      kids.clear();
      kid_counts.clear();
      for (std::size_t j = 0; j < m; ++j) {
        if (v[j] == 0) continue;
        if (layer == 1 || v[j] == layer) {
          cur[idx] = p.atoms[j];
          return;
        }
        kids.push_back(j + 1 < m ? prev[idx - stride[j]] : prev[idx]);
        kid_counts.push_back(v[j]);
      }
      if (layer == 2) {
        cur[idx] = midpoint(kids[0], kids[1]);
        return;
      }
      cur[idx] = finish(canonical_multiset(kids, kid_counts), eta, depth);
    });
    std::swap(prev, cur);
  }

  std::vector<Point> out;
  out.reserve(m);
  std::size_t top = 0;
  for (std::size_t j = 0; j + 1 < m; ++j) top += static_cast<std::size_t>(p.counts[j]) * stride[j];
  for (std::size_t j = 0; j < m; ++j) out.push_back(j + 1 < m ? prev[top - stride[j]] : prev[top]);
  return out;
}

}  // namespace busemann
