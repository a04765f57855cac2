#include "busemann/fixtures.hpp"

#include <cmath>

#include "busemann/barycenter.hpp"
#include "busemann/metric_tree.hpp"

namespace busemann {

namespace {

FixtureResult check(std::string name, double measured, double expected, double tolerance, std::string relation) {
  FixtureResult r{std::move(name), measured, expected, tolerance, std::move(relation), false, false, {}};
  if (r.relation == "eq") r.passed = std::abs(measured - expected) <= tolerance;
  if (r.relation == "ge") r.passed = measured >= expected;
  if (r.relation == "gt") r.passed = measured > expected;
  return r;
}

}  // namespace

std::vector<FixtureResult> run_fixtures(double tol) {
  const MetricTree tripod = MetricTree::tripod(1.0);
  const Point o = tripod.vertex("o"), x = tripod.vertex("x"), y = tripod.vertex("y"), z = tripod.vertex("z");
  std::vector<FixtureResult> out;

  const FiniteFamily q({x, x, y, z});
  const Point b4 = bar_n(tripod, q, tol).point;
  const Point b8 = bar_n(tripod, replicate(q, 2), tol).point;
  out.push_back(check("tripod_bar4_distance_to_x", tripod.distance(b4, x), 7.0 / 9.0, 1e-6, "eq"));
  out.push_back(check("tripod_bar8_distance_to_x", tripod.distance(b8, x), 2533.0 / 3150.0, 1e-6, "eq"));
  out.push_back(check("tripod_bar4_bar8_separation", tripod.distance(b4, b8), 1e-3, 0.0, "ge"));

  // Entry of x after two leave-one-out rounds, before the family collapses.
  const FiniteFamily second = leave_one_out_round(tripod, leave_one_out_round(tripod, q, tol), tol);
  FixtureResult slot = check("tripod_two_round_x_slot_distance_to_x", tripod.distance(second[0], x), 7.0 / 9.0, 1e-6, "eq");
  slot.informational = true;
  slot.note = "first slot after two rounds; the collapsed limit is measured above";
  out.push_back(slot);

  const RationalMeasure uneven({{x, Fraction(1, 2)}, {y, Fraction(1, 4)}, {z, Fraction(1, 4)}});
  out.push_back(check("uneven_tripod_cartan_at_center", tripod.distance(cartan_barycenter(tripod, uneven, 1e-12), o),
                      0.0, 1e-8, "eq"));
  BarStarOptions opts;
  opts.stop_on_small_gap = false;
  const BarycenterReport star = bar_star(tripod, uneven, 1e-6, opts);
  const double from_center = tripod.distance(star.point, o);
  const double off_axis = tripod.distance(star.point, o) + tripod.distance(star.point, x) - 1.0;
  FixtureResult axis = check("uneven_tripod_bar_star_offset_on_x_edge", std::abs(off_axis) <= 1e-9 ? from_center : 0.0,
                             kUnevenTripodMargin, 0.0, "gt");
  axis.note = "replication level " + std::to_string(star.replication_level) + ", stop " + star.stop_reason;
  out.push_back(axis);
  return out;
}

bool fixtures_passed(const std::vector<FixtureResult>& results) {
  for (const auto& r : results)
    if (!r.informational && !r.passed) return false;
  return true;
}

Json fixtures_to_json(const std::vector<FixtureResult>& results) {
  Json rows = Json::array();
  for (const auto& r : results)
    rows.push_back({{"name", r.name},
                    {"measured", r.measured},
                    {"expected", r.expected},
                    {"tolerance", r.tolerance},
                    {"relation", r.relation},
                    {"passed", r.passed},
                    {"informational", r.informational},
                    {"note", r.note}});
  return {{"fixtures", rows}, {"passed", fixtures_passed(results)}};
}

}  // namespace busemann
