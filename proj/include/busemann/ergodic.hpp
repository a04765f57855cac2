#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "busemann/barycenter.hpp"
#include "busemann/family.hpp"
#include "busemann/rng.hpp"
#include "busemann/space.hpp"

namespace busemann {

enum class Group { Z, Z2 };

/// A point of [0, 1) (second coordinate unused) or of the torus [0, 1)^2.
using State = std::array<double, 2>;
using GroupElement = std::array<std::int64_t, 2>;

/// Invertible measure-preserving action of Z or Z^2.
class DynamicalSystem {
 public:
  /// omega -> omega + alpha mod 1 on [0, 1) with Lebesgue measure.
  static DynamicalSystem rotation(double alpha);
  /// Rotation by the golden ratio conjugate (sqrt(5) - 1) / 2.
  static DynamicalSystem golden_rotation();
  /// Z^2 acting on the torus: (g1, g2) adds (g1 alpha1, g2 alpha2) mod 1.
  static DynamicalSystem torus_translation(double alpha1, double alpha2);
  /// i -> perm[i] on {0, ..., N-1} with uniform measure; states are i / N.
  static DynamicalSystem permutation(std::vector<int> perm);

  const std::string& kind() const { return kind_; }
  Group group() const { return group_; }
  /// T^g omega.
  State act(const State& omega, const GroupElement& g) const;
  /// Draw from the invariant measure.
  State sample(CounterRng& rng) const;
  /// Box window F_n: {0..n-1} or {0..n-1}^2, in lexicographic order.
  std::vector<GroupElement> window(int n) const;
  /// Rotation angles, or the permutation as doubles.
  const std::vector<double>& parameters() const { return params_; }

 private:
  DynamicalSystem(std::string kind, Group group, std::vector<double> params);
  double shift(double w, double alpha, std::int64_t g) const;

  std::string kind_;
  Group group_;
  std::vector<double> params_;
  std::vector<int> perm_;
  std::vector<int> inverse_;
};

/// Measurable map from states into one geodesic space.
class Observable {
 public:
  /// Cell i = [breaks[i], breaks[i+1]) of the first coordinate maps to points[i].
  /// Breaks start at 0, end at 1 and increase strictly.
  static Observable finite_valued(const GeodesicSpace& space, std::vector<Fraction> breaks, std::vector<Point> points);
  /// omega -> omega_1 in R (space must be 1-dimensional Euclidean).
  static Observable identity(const GeodesicSpace& space);
  /// omega -> (omega_1, omega_2) in R^2.
  static Observable torus_coordinates(const GeodesicSpace& space);
  /// omega -> geodesic point from a to b at parameter omega_1.
  static Observable geodesic_path(const GeodesicSpace& space, Point a, Point b);
  /// omega -> circle of hyperbolic-euclidean radius r about (cx, cy), cy > r.
  static Observable halfplane_circle(const GeodesicSpace& space, double cx, double cy, double r);
  /// Constant map.
  static Observable constant(const GeodesicSpace& space, Point p);

  Point operator()(const State& omega) const { return map_(omega); }
  const GeodesicSpace& space() const { return *space_; }
  const std::string& kind() const { return kind_; }
  bool finite() const { return !breaks_.empty(); }
  const std::vector<Fraction>& breaks() const { return breaks_; }
  const std::vector<Point>& cell_points() const { return points_; }
  /// Real-valued: the target is 1-dimensional Euclidean space.
  bool real_valued() const;

 private:
  Observable(const GeodesicSpace& space, std::string kind, std::function<Point(const State&)> map);

  const GeodesicSpace* space_;
  std::string kind_;
  std::function<Point(const State&)> map_;
  std::vector<Fraction> breaks_;
  std::vector<Point> points_;
};

/// mu_{n, phi}(omega): equal weights on phi(T^g omega), g in F_n.
RationalMeasure empirical_measure(const DynamicalSystem& system, const Observable& phi, const State& omega, int n);

/// bar_star of the empirical measure; the denominator cap is raised to |F_n|.
BarycenterReport ergodic_average(const DynamicalSystem& system, const Observable& phi, const State& omega, int n,
                                 double tol, BarStarOptions options = {});

/// Classical average (1/|F_n|) sum phi(T^g omega) for real-valued phi.
double birkhoff_average(const DynamicalSystem& system, const Observable& phi, const State& omega, int n);

/// Exact invariant measure of each cell of a finite-valued observable, as the
/// limit measure sum lambda_i delta_{x_i}.
RationalMeasure cell_limit_measure(const DynamicalSystem& system, const Observable& phi);

struct TemperedRow {
  int n = 0;
  std::int64_t union_size = 0;
  std::int64_t window_size = 0;
  double ratio = 0.0;
};

struct TemperedReport {
  double c_observed = 0.0;
  std::vector<TemperedRow> per_n;
};

/// Exact size of the union over k < n of F_k^{-1} F_n for box windows, for
/// 2 <= n <= max_n.
TemperedReport temperedness_check(Group group, int max_n);

struct PreservationReport {
  double max_bin_deviation = 0.0;
  double threshold = 0.0;
  double max_inverse_error = 0.0;
  bool passed = false;
};

/// Monte-Carlo pushforward test: bins of T(omega) against the invariant
/// measure at tolerance 3 / sqrt(samples), plus T^{-1} T = id.
PreservationReport measure_preservation_check(const DynamicalSystem& system, int samples, std::uint64_t seed);

struct GapRow {
  double lambda = 0.0;
  double probability = 0.0;
  double ratio = 0.0;
};

struct MaximalGapReport {
  std::vector<double> sups;
  double d1 = 0.0;
  std::vector<GapRow> rows;
};

/// For seeded omega, sup over n <= max_n of the distance between the ergodic
/// averages of phi and psi; tail probabilities on a lambda grid; and the
/// ratio probability * lambda / d1(phi, psi). An empty grid selects eight
/// evenly spaced values up to the largest sup.
MaximalGapReport maximal_gap_probe(const DynamicalSystem& system, const Observable& phi, const Observable& psi,
                                   int omega_samples, int max_n, double tol, std::uint64_t seed,
                                   std::vector<double> lambdas = {}, const BarStarOptions& options = {});

struct DiagnosticRow {
  int n = 0;
  Point point;
  double distance = 0.0;
};

struct ConvergenceReport {
  Point candidate;
  /// "cell_limit" for finite-valued observables, else "last_grid_point".
  std::string candidate_kind;
  std::vector<DiagnosticRow> rows;
};

ConvergenceReport convergence_diagnostics(const DynamicalSystem& system, const Observable& phi, const State& omega,
                                          const std::vector<int>& n_grid, double tol,
                                          const BarStarOptions& options = {});

struct ContractionEstimate {
  double mean_gap = 0.0;
  double gap_stderr = 0.0;
  double d1 = 0.0;
  double d1_stderr = 0.0;
};

/// Monte-Carlo estimates of E d(bar*(mu_{n,phi}), bar*(mu_{n,psi})) and of
/// d1(phi, psi) = E d(phi, psi) over the invariant measure.
ContractionEstimate contraction_estimate(const DynamicalSystem& system, const Observable& phi, const Observable& psi,
                                         int n, int samples, double tol, std::uint64_t seed,
                                         const BarStarOptions& options = {});

/// Monte-Carlo d1(phi, psi) = E d(phi(omega), psi(omega)).
double l1_distance(const DynamicalSystem& system, const Observable& phi, const Observable& psi, int samples,
                   std::uint64_t seed);

}  // namespace busemann
