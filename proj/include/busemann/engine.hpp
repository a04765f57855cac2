#pragma once

#include <cstdint>
#include <vector>

#include "busemann/family.hpp"
#include "busemann/space.hpp"

namespace busemann {

struct EngineOptions {
  /// Closed-form mean of arclength coordinates when a working family lies on
  /// one geodesic segment.
  bool geodesic_fast_path = true;
  /// Cap on counted work units (distance and geodesic evaluations, DP nodes);
  /// 0 means unlimited. Exceeding it throws ResourceError.
  std::uint64_t work_budget = 0;
  /// Cap on the number of sub-multisets visited by one leave-one-out pass.
  std::uint64_t box_budget = 40'000'000;
  int max_rounds = 200;
};

struct EngineStats {
  std::uint64_t work = 0;
  std::uint64_t nodes = 0;
  std::uint64_t fast_path_hits = 0;
  int top_rounds = 0;
};

/// Evaluates the inductive barycenter on multisets.
///
/// A leave-one-out round over a multiset with counts c needs bar of every
/// sub-multiset c - e_j, and those in turn need every smaller sub-multiset.
/// The round therefore sweeps the box {v <= c} layer by layer in |v|, so each
/// sub-multiset is evaluated once. Since atoms are sorted and merged first, the
/// result is exactly invariant under permutations of the input.
///
/// Error control: a node at layer L is finished to within eta = tau / (N - 3),
/// and errors add across layers because each node is 1-Lipschitz in the mean
/// of its inputs; so a round at tolerance tau is accurate to tau. Finishing a
/// working family stops once its diameter is at most half the target, having
/// spent at most the other half inside its rounds.
class BarycenterEngine {
 public:
  explicit BarycenterEngine(const GeodesicSpace& space, EngineOptions options = {});

  /// bar_N of the multiset (N = total count), within tol.
  Point solve(const Multiset& family, double tol);

  /// One simultaneous leave-one-out round: entry j is bar of the multiset with
  /// one copy of atom j removed, within tol. Requires total count >= 3.
  std::vector<Point> leave_one_out(const Multiset& family, double tol);

  const EngineStats& stats() const { return stats_; }

 private:
  Point finish(Multiset w, double eta, int depth);
  std::vector<Point> round(const Multiset& p, double tau, int depth);
  Point closed_form(const SegmentChart& chart, const std::vector<int>& counts, int total) const;
  bool try_chart(const std::vector<Point>& pts, SegmentChart& out);
  double diameter(const std::vector<Point>& pts);
  Point midpoint(const Point& a, const Point& b);
  void charge(std::uint64_t units);
  void set_scale(const std::vector<Point>& atoms);

  const GeodesicSpace& space_;
  EngineOptions options_;
  EngineStats stats_;
  double floor_ = 1e-14;
  double slack_ = 1e-13;
};

}  // namespace busemann
