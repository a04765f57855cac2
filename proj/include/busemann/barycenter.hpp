#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "busemann/engine.hpp"
#include "busemann/family.hpp"

namespace busemann {

struct BarycenterReport {
  Point point;
  std::vector<int> rounds_per_level;
  int replication_level = 1;
  /// Distances between results at consecutive replication levels.
  std::vector<double> cauchy_gaps;
  double tolerance_used = 0.0;
  /// Diameter of the input atoms.
  double initial_diameter = 0.0;
  /// Size n of the equal-weight expansion before replication.
  std::int64_t base_size = 1;
  /// Family size n * k at the final level.
  std::int64_t total_size = 1;
  /// D / k at the final level, the replication bound for one more copy.
  double tail_estimate = 0.0;
  bool converged = true;
  /// converged | single_atom | geodesic | gap | max_replication | box_budget | work_budget
  std::string stop_reason = "converged";
  std::uint64_t work = 0;
};

BarycenterReport bar_n(const GeodesicSpace& space, const FiniteFamily& family, double tol,
                       const EngineOptions& options = {});

/// One simultaneous leave-one-out round applied slot by slot.
FiniteFamily leave_one_out_round(const GeodesicSpace& space, const FiniteFamily& family, double tol,
                                 const EngineOptions& options = {});

struct BarStarOptions {
  /// Largest accepted common denominator of the weights.
  std::int64_t denominator_cap = 64;
  /// Base expansion size; 0 selects the common denominator. Must be a
  /// multiple of it. Two measures evaluated at the same size are compared at
  /// the same replication levels.
  std::int64_t expansion_size = 0;
  int max_replication = 256;
  /// Levels k > 1 are skipped once their leave-one-out box would exceed this.
  std::uint64_t box_budget = 5'000'000;
  /// Total work over all levels; 0 means unlimited.
  std::uint64_t work_budget = 0;
  /// Stop as soon as a doubling gap falls below tol / 2.
  bool stop_on_small_gap = true;
  EngineOptions engine;
};

/// Replication limit along k = 1, 2, 4, ...: evaluates bar_{nk}(Q^k) with Q
/// the equal-weight expansion of the measure. Stops when D / k < tol / 2, when
/// a doubling gap drops below tol / 2, or at the first exhausted cap; the
/// report says which.
BarycenterReport bar_star(const GeodesicSpace& space, const RationalMeasure& measure, double tol,
                          const BarStarOptions& options = {});

/// Number of nodes a leave-one-out pass over the counts visits.
std::uint64_t box_size(const std::vector<int>& counts);

struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack() const { return rhs - lhs; }
};

/// lhs = d(x, bar_n(family)); rhs = mean of d(x, bar_{n-l}(family minus l
/// entries)) over all ordered deletions of l entries.
BoundCheck leave_l_out_mean_bound_check(const GeodesicSpace& space, const Point& x, const FiniteFamily& family,
                                        int l, double tol, const EngineOptions& options = {});

/// lhs = d(bar_n(X), bar_n(Y)); rhs = (1/n) sum d(x_i, y_i).
BoundCheck contraction_round_check(const GeodesicSpace& space, const FiniteFamily& x, const FiniteFamily& y,
                                   double tol, const EngineOptions& options = {});

struct ReplicationGap {
  int k = 1;
  int l = 1;
  double gap = 0.0;
  /// D * l / k.
  double bound = 0.0;
};

/// d(bar_{nk}(Q^k), bar_{n(k+l)}(Q^{k+l})) for the base expansion Q.
ReplicationGap replication_gap(const GeodesicSpace& space, const RationalMeasure& measure, int k, int l, double tol,
                               const EngineOptions& options = {});

/// Minimizer of sum w_i d(p, atom_i)^2. Euclidean and tree spaces only.
Point cartan_barycenter(const GeodesicSpace& space, const RationalMeasure& measure, double tol);

}  // namespace busemann
