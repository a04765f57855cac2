#include "busemann/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "busemann/errors.hpp"

namespace busemann {

CostMatrix::CostMatrix(std::size_t m) : m_(m), data_(m * m, 0.0) {
  if (m == 0) throw DomainError("cost matrix must be nonempty");
}

void CostMatrix::set(std::size_t i, std::size_t j, double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("costs must be finite and nonnegative");
  data_[i * m_ + j] = c;
}

CostMatrix CostMatrix::pairwise(const GeodesicSpace& space, const std::vector<Point>& rows,
                                const std::vector<Point>& cols) {
  if (rows.size() != cols.size()) throw DomainError("pairwise cost needs lists of equal length");
  CostMatrix c(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) c.set(i, j, space.distance(rows[i], cols[j]));
  return c;
}

double assignment_cost(const CostMatrix& cost, const std::vector<int>& col_of_row) {
  double s = 0.0;
  for (std::size_t i = 0; i < col_of_row.size(); ++i) s += cost(i, static_cast<std::size_t>(col_of_row[i]));
  return s;
}

Assignment solve_assignment(const CostMatrix& cost) {
  const std::size_t m = cost.size();
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based potentials; column 0 is a virtual start column.
  std::vector<double> u(m + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> row_of_col(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    row_of_col[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = row_of_col[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[row_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of_col[j0] = row_of_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Assignment a;
  a.col_of_row.assign(m, -1);
  for (std::size_t j = 1; j <= m; ++j) a.col_of_row[row_of_col[j] - 1] = static_cast<int>(j - 1);
  a.cost = assignment_cost(cost, a.col_of_row);
  return a;
}

std::int64_t joint_denominator(const RationalMeasure& mu1, const RationalMeasure& mu2) {
  return std::lcm(mu1.common_denominator(), mu2.common_denominator());
}

namespace {

std::vector<Point> expanded(const RationalMeasure& mu, std::int64_t m) { return mu.expand_family(m).points(); }

void check_same_space(const GeodesicSpace& space, const RationalMeasure& mu1, const RationalMeasure& mu2) {
  mu1.validate(space);
  mu2.validate(space);
}

}  // namespace

double w1(const GeodesicSpace& space, const RationalMeasure& mu1, const RationalMeasure& mu2,
          std::int64_t denominator_cap) {
  check_same_space(space, mu1, mu2);
  const std::int64_t m = joint_denominator(mu1, mu2);
  if (m > denominator_cap)
    throw ResourceError("common denominator " + std::to_string(m) + " exceeds the cap of " +
                        std::to_string(denominator_cap));
  const CostMatrix c = CostMatrix::pairwise(space, expanded(mu1, m), expanded(mu2, m));
  return solve_assignment(c).cost / static_cast<double>(m);
}

double w1_bruteforce(const GeodesicSpace& space, const RationalMeasure& mu1, const RationalMeasure& mu2) {
  check_same_space(space, mu1, mu2);
  const std::int64_t m = joint_denominator(mu1, mu2);
  if (m > 8) throw ResourceError("brute-force W1 supports expansions of at most 8 points, got " + std::to_string(m));
  const CostMatrix c = CostMatrix::pairwise(space, expanded(mu1, m), expanded(mu2, m));
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do best = std::min(best, assignment_cost(c, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best / static_cast<double>(m);
}

}  // namespace busemann
