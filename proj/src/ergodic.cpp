#include "busemann/ergodic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "busemann/errors.hpp"
#include "busemann/euclidean.hpp"
#include "busemann/half_plane.hpp"

namespace busemann {

DynamicalSystem::DynamicalSystem(std::string kind, Group group, std::vector<double> params)
    : kind_(std::move(kind)), group_(group), params_(std::move(params)) {}

DynamicalSystem DynamicalSystem::rotation(double alpha) {
  if (!std::isfinite(alpha)) throw DomainError("rotation angle must be finite");
  return DynamicalSystem("rotation", Group::Z, {alpha - std::floor(alpha)});
}

DynamicalSystem DynamicalSystem::golden_rotation() { return rotation((std::sqrt(5.0) - 1.0) / 2.0); }

DynamicalSystem DynamicalSystem::torus_translation(double alpha1, double alpha2) {
  if (!std::isfinite(alpha1) || !std::isfinite(alpha2)) throw DomainError("translation vector must be finite");
  return DynamicalSystem("torus", Group::Z2, {alpha1 - std::floor(alpha1), alpha2 - std::floor(alpha2)});
}

DynamicalSystem DynamicalSystem::permutation(std::vector<int> perm) {
  const std::size_t n = perm.size();
  if (n == 0) throw DomainError("permutation system needs at least one point");
  std::vector<int> inv(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const int j = perm[i];
    if (j < 0 || static_cast<std::size_t>(j) >= n || inv[static_cast<std::size_t>(j)] >= 0)
      throw DomainError("permutation system needs a bijection of {0, ..., N-1}");
    inv[static_cast<std::size_t>(j)] = static_cast<int>(i);
  }
  DynamicalSystem s("permutation", Group::Z, std::vector<double>(perm.begin(), perm.end()));
  s.perm_ = std::move(perm);
  s.inverse_ = std::move(inv);
  return s;
}

double DynamicalSystem::shift(double w, double alpha, std::int64_t g) const {
  const double step = std::fmod(static_cast<double>(g) * alpha, 1.0);
  double r = w + step;
  r -= std::floor(r);
  return r >= 1.0 ? 0.0 : r;
}

State DynamicalSystem::act(const State& omega, const GroupElement& g) const {
  if (group_ == Group::Z && g[1] != 0) throw DomainError("Z action applied to a Z^2 element");
  if (kind_ == "rotation") return {shift(omega[0], params_[0], g[0]), 0.0};
  if (kind_ == "torus") return {shift(omega[0], params_[0], g[0]), shift(omega[1], params_[1], g[1])};
  const auto n = static_cast<std::int64_t>(perm_.size());
  auto i = static_cast<std::int64_t>(std::llround(omega[0] * static_cast<double>(n)));
  if (i < 0 || i >= n) throw DomainError("state is not a point of the permutation system");
  const auto& step = g[0] >= 0 ? perm_ : inverse_;
  for (std::int64_t k = 0; k < std::abs(g[0]); ++k) i = step[static_cast<std::size_t>(i)];
  return {static_cast<double>(i) / static_cast<double>(n), 0.0};
}

State DynamicalSystem::sample(CounterRng& rng) const {
  if (kind_ == "permutation") {
    const auto n = static_cast<std::int64_t>(perm_.size());
    return {static_cast<double>(rng.uniform_int(0, n - 1)) / static_cast<double>(n), 0.0};
  }
  const double a = rng.uniform();
  const double b = group_ == Group::Z2 ? rng.uniform() : 0.0;
  return {a, b};
}

std::vector<GroupElement> DynamicalSystem::window(int n) const {
  if (n < 1) throw DomainError("window index must be >= 1");
  std::vector<GroupElement> out;
  if (group_ == Group::Z) {
    for (int g = 0; g < n; ++g) out.push_back({g, 0});
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) out.push_back({a, b});
  }
  return out;
}

Observable::Observable(const GeodesicSpace& space, std::string kind, std::function<Point(const State&)> map)
    : space_(&space), kind_(std::move(kind)), map_(std::move(map)) {}

Observable Observable::finite_valued(const GeodesicSpace& space, std::vector<Fraction> breaks,
                                     std::vector<Point> points) {
  if (breaks.size() < 2 || points.size() + 1 != breaks.size())
    throw DomainError("finite observable needs k + 1 breakpoints for k points");
  if (breaks.front() != Fraction(0) || breaks.back() != Fraction(1))
    throw DomainError("finite observable breakpoints must run from 0 to 1");
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    if (!(breaks[i] < breaks[i + 1])) throw DomainError("finite observable breakpoints must increase");
  for (const Point& p : points) space.validate(p);
  std::vector<double> cuts;
  for (const Fraction& b : breaks) cuts.push_back(boost::rational_cast<double>(b));
  Observable o(space, "finite", [cuts, points](const State& w) {
    const auto it = std::upper_bound(cuts.begin() + 1, cuts.end() - 1, w[0]);
    return points[static_cast<std::size_t>(it - cuts.begin() - 1)];
  });
  o.breaks_ = std::move(breaks);
  o.points_ = std::move(points);
  return o;
}

Observable Observable::identity(const GeodesicSpace& space) {
  const auto* e = dynamic_cast<const EuclideanSpace*>(&space);
  if (e == nullptr || e->dim() != 1) throw DomainError("identity observable needs the real line");
  return Observable(space, "identity", [](const State& w) -> Point { return EuclideanPoint{Coords{w[0]}}; });
}

Observable Observable::torus_coordinates(const GeodesicSpace& space) {
  const auto* e = dynamic_cast<const EuclideanSpace*>(&space);
  if (e == nullptr || e->dim() != 2) throw DomainError("torus coordinates need the plane");
  return Observable(space, "torus_coordinates",
                    [](const State& w) -> Point { return EuclideanPoint{Coords{w[0], w[1]}}; });
}

Observable Observable::geodesic_path(const GeodesicSpace& space, Point a, Point b) {
  space.validate(a);
  space.validate(b);
  return Observable(space, "geodesic_path", [&space, a = std::move(a), b = std::move(b)](const State& w) {
    return space.geodesic_point(a, b, std::clamp(w[0], 0.0, 1.0));
  });
}

Observable Observable::halfplane_circle(const GeodesicSpace& space, double cx, double cy, double r) {
  if (dynamic_cast<const HalfPlaneSpace*>(&space) == nullptr) throw DomainError("circle observable needs the half-plane");
  if (!(r > 0.0) || !(cy > r)) throw DomainError("circle must lie strictly above the boundary");
  return Observable(space, "halfplane_circle", [cx, cy, r](const State& w) -> Point {
    const double t = 2.0 * M_PI * w[0];
    return HalfPlanePoint{cx + r * std::cos(t), cy + r * std::sin(t)};
  });
}

Observable Observable::constant(const GeodesicSpace& space, Point p) {
  space.validate(p);
  return Observable(space, "constant", [p = std::move(p)](const State&) { return p; });
}

bool Observable::real_valued() const {
  const auto* e = dynamic_cast<const EuclideanSpace*>(space_);
  return e != nullptr && e->dim() == 1;
}

RationalMeasure empirical_measure(const DynamicalSystem& system, const Observable& phi, const State& omega, int n) {
  const auto window = system.window(n);
  const Fraction w(1, static_cast<std::int64_t>(window.size()));
  std::vector<RationalMeasure::Atom> atoms;
  atoms.reserve(window.size());
  for (const auto& g : window) atoms.push_back({phi(system.act(omega, g)), w});
  return RationalMeasure(std::move(atoms));
}

BarycenterReport ergodic_average(const DynamicalSystem& system, const Observable& phi, const State& omega, int n,
                                 double tol, BarStarOptions options) {
  const RationalMeasure mu = empirical_measure(system, phi, omega, n);
  options.denominator_cap = std::max<std::int64_t>(options.denominator_cap, mu.common_denominator());
  return bar_star(phi.space(), mu, tol, options);
}

double birkhoff_average(const DynamicalSystem& system, const Observable& phi, const State& omega, int n) {
  if (!phi.real_valued()) throw DomainError("birkhoff average needs a real-valued observable");
  const auto window = system.window(n);
  double s = 0.0;
  for (const auto& g : window) s += std::get<EuclideanPoint>(phi(system.act(omega, g))).x[0];
  return s / static_cast<double>(window.size());
}

RationalMeasure cell_limit_measure(const DynamicalSystem& system, const Observable& phi) {
  if (!phi.finite()) throw DomainError("cell limit needs a finite-valued observable");
  const auto& b = phi.breaks();
  std::vector<RationalMeasure::Atom> atoms;
  if (system.kind() == "permutation") {
    const auto n = static_cast<std::int64_t>(system.parameters().size());
    std::vector<std::int64_t> count(b.size() - 1, 0);
    for (std::int64_t i = 0; i < n; ++i) {
      const Fraction u(i, n);
      const auto it = std::upper_bound(b.begin() + 1, b.end() - 1, u);
      ++count[static_cast<std::size_t>(it - b.begin() - 1)];
    }
    for (std::size_t c = 0; c < count.size(); ++c)
      if (count[c] > 0) atoms.push_back({phi.cell_points()[c], Fraction(count[c], n)});
  } else {
    for (std::size_t c = 0; c + 1 < b.size(); ++c) atoms.push_back({phi.cell_points()[c], b[c + 1] - b[c]});
  }
  return RationalMeasure(std::move(atoms));
}

TemperedReport temperedness_check(Group group, int max_n) {
  if (max_n < 2) throw DomainError("temperedness check needs max_n >= 2");
  TemperedReport rep;
  const int dims = group == Group::Z ? 1 : 2;
  for (int n = 2; n <= max_n; ++n) {
    // Offsets b - a lie in [-(n-2), n-1] per coordinate.
    const int lo = -(n - 2);
    const int side = 2 * n - 1;
    std::vector<char> hit(static_cast<std::size_t>(dims == 1 ? side : side * side), 0);
    // The windows are nested, so the union over k < n only needs the new
    // elements of F_k for each k.
    for (int k = 1; k < n; ++k) {
      if (dims == 1) {
        const int a = k - 1;
        for (int b = 0; b < n; ++b) hit[static_cast<std::size_t>(b - a - lo)] = 1;
      } else {
        for (int a1 = 0; a1 < k; ++a1)
          for (int a2 = 0; a2 < k; ++a2) {
            if (a1 != k - 1 && a2 != k - 1) continue;
            for (int b1 = 0; b1 < n; ++b1)
              for (int b2 = 0; b2 < n; ++b2)
                hit[static_cast<std::size_t>((b1 - a1 - lo) * side + (b2 - a2 - lo))] = 1;
          }
      }
    }
    TemperedRow row;
    row.n = n;
    row.union_size = std::count(hit.begin(), hit.end(), 1);
    row.window_size = dims == 1 ? n : static_cast<std::int64_t>(n) * n;
    row.ratio = static_cast<double>(row.union_size) / static_cast<double>(row.window_size);
    rep.c_observed = std::max(rep.c_observed, row.ratio);
    rep.per_n.push_back(row);
  }
  return rep;
}

PreservationReport measure_preservation_check(const DynamicalSystem& system, int samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("preservation check needs samples >= 1");
  constexpr int kBins = 8;
  const bool torus = system.group() == Group::Z2;
  const GroupElement step = torus ? GroupElement{1, 1} : GroupElement{1, 0};
  const GroupElement back = torus ? GroupElement{-1, -1} : GroupElement{-1, 0};
  std::vector<double> hist(torus ? kBins * kBins : kBins, 0.0);
  CounterRng rng(seed);
  PreservationReport rep;
  for (int s = 0; s < samples; ++s) {
    const State w = system.sample(rng);
    const State tw = system.act(w, step);
    const State bw = system.act(tw, back);
    double err = std::abs(bw[0] - w[0]);
    if (torus) err = std::max(err, std::abs(bw[1] - w[1]));
    rep.max_inverse_error = std::max(rep.max_inverse_error, std::min(err, 1.0 - err));
    const int i = std::min(kBins - 1, static_cast<int>(tw[0] * kBins));
    const int j = torus ? std::min(kBins - 1, static_cast<int>(tw[1] * kBins)) : 0;
    hist[static_cast<std::size_t>(i * (torus ? kBins : 1) + j)] += 1.0;
  }
  // Reference masses of the bins under the invariant measure.
  std::vector<double> expect(hist.size(), 1.0 / static_cast<double>(hist.size()));
  if (system.kind() == "permutation") {
    std::fill(expect.begin(), expect.end(), 0.0);
    const auto n = static_cast<double>(system.parameters().size());
    for (std::size_t i = 0; i < system.parameters().size(); ++i)
      expect[static_cast<std::size_t>(std::min(kBins - 1, static_cast<int>(static_cast<double>(i) / n * kBins)))] +=
          1.0 / n;
  }
  for (std::size_t b = 0; b < hist.size(); ++b)
    rep.max_bin_deviation = std::max(rep.max_bin_deviation, std::abs(hist[b] / samples - expect[b]));
  rep.threshold = 3.0 / std::sqrt(static_cast<double>(samples));
  rep.passed = rep.max_bin_deviation <= rep.threshold && rep.max_inverse_error <= 1e-9;
  return rep;
}

double l1_distance(const DynamicalSystem& system, const Observable& phi, const Observable& psi, int samples,
                   std::uint64_t seed) {
  if (samples < 1) throw DomainError("l1 distance needs samples >= 1");
  CounterRng rng(seed);
  double s = 0.0;
  for (int i = 0; i < samples; ++i) {
    const State w = system.sample(rng);
    s += phi.space().distance(phi(w), psi(w));
  }
  return s / samples;
}

MaximalGapReport maximal_gap_probe(const DynamicalSystem& system, const Observable& phi, const Observable& psi,
                                   int omega_samples, int max_n, double tol, std::uint64_t seed,
                                   std::vector<double> lambdas, const BarStarOptions& options) {
  if (omega_samples < 1) throw DomainError("maximal gap probe needs omega_samples >= 1");
  if (max_n < 1) throw DomainError("maximal gap probe needs max_n >= 1");
  if (&phi.space() != &psi.space()) throw DomainError("observables must share a target space");
  const GeodesicSpace& space = phi.space();
  MaximalGapReport rep;
  CounterRng draws = CounterRng(seed).split(1);
  for (int s = 0; s < omega_samples; ++s) {
    const State w = system.sample(draws);
    double sup = 0.0;
    for (int n = 1; n <= max_n; ++n) {
      const Point a = ergodic_average(system, phi, w, n, tol, options).point;
      const Point b = ergodic_average(system, psi, w, n, tol, options).point;
      sup = std::max(sup, space.distance(a, b));
    }
    rep.sups.push_back(sup);
  }
  rep.d1 = l1_distance(system, phi, psi, 4096, CounterRng(seed).split(2).next_u64());
  if (lambdas.empty()) {
    const double top = *std::max_element(rep.sups.begin(), rep.sups.end());
    const double unit = top > 0.0 ? top / 8.0 : 0.125;
    for (int i = 1; i <= 8; ++i) lambdas.push_back(unit * i);
  }
  for (double lambda : lambdas) {
    GapRow row;
    row.lambda = lambda;
    const auto hits = std::count_if(rep.sups.begin(), rep.sups.end(), [&](double v) { return v >= lambda; });
    row.probability = static_cast<double>(hits) / omega_samples;
    row.ratio = row.probability == 0.0 ? 0.0 : row.probability * lambda / rep.d1;
    rep.rows.push_back(row);
  }
  return rep;
}

ConvergenceReport convergence_diagnostics(const DynamicalSystem& system, const Observable& phi, const State& omega,
                                          const std::vector<int>& n_grid, double tol,
                                          const BarStarOptions& options) {
  if (n_grid.empty()) throw DomainError("diagnostics need a nonempty window grid");
  for (std::size_t i = 1; i < n_grid.size(); ++i)
    if (n_grid[i] <= n_grid[i - 1]) throw DomainError("window grid must be ascending");
  ConvergenceReport rep;
  for (int n : n_grid) rep.rows.push_back({n, ergodic_average(system, phi, omega, n, tol, options).point, 0.0});
  if (phi.finite()) {
    rep.candidate = bar_star(phi.space(), cell_limit_measure(system, phi), tol, options).point;
    rep.candidate_kind = "cell_limit";
  } else {
    rep.candidate = rep.rows.back().point;
    rep.candidate_kind = "last_grid_point";
  }
  for (auto& row : rep.rows) row.distance = phi.space().distance(row.point, rep.candidate);
  return rep;
}

ContractionEstimate contraction_estimate(const DynamicalSystem& system, const Observable& phi, const Observable& psi,
                                         int n, int samples, double tol, std::uint64_t seed,
                                         const BarStarOptions& options) {
  if (samples < 2) throw DomainError("contraction estimate needs samples >= 2");
  const GeodesicSpace& space = phi.space();
  CounterRng rng(seed);
  std::vector<double> gaps, pointwise;
  for (int s = 0; s < samples; ++s) {
    const State w = system.sample(rng);
    gaps.push_back(space.distance(ergodic_average(system, phi, w, n, tol, options).point,
                                  ergodic_average(system, psi, w, n, tol, options).point));
    pointwise.push_back(space.distance(phi(w), psi(w)));
  }
  auto stats = [&](const std::vector<double>& v, double& mean, double& se) {
    mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    se = std::sqrt(ss / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
  };
  ContractionEstimate e;
  stats(gaps, e.mean_gap, e.gap_stderr);
  stats(pointwise, e.d1, e.d1_stderr);
  return e;
}

}  // namespace busemann
