#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "busemann/family.hpp"
#include "busemann/space.hpp"

namespace busemann {

/// Square matrix of nonnegative costs, row-major.
class CostMatrix {
 public:
  explicit CostMatrix(std::size_t m);
  static CostMatrix pairwise(const GeodesicSpace& space, const std::vector<Point>& rows,
                             const std::vector<Point>& cols);

  std::size_t size() const { return m_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * m_ + j]; }
  /// Throws DomainError for negative or non-finite costs.
  void set(std::size_t i, std::size_t j, double c);

 private:
  std::size_t m_;
  std::vector<double> data_;
};

struct Assignment {
  /// Row i is matched to column col_of_row[i].
  std::vector<int> col_of_row;
  /// Sum of matched costs, accumulated in row order.
  double cost = 0.0;
};

/// Minimum-cost perfect matching by the Hungarian method with potentials, O(m^3).
Assignment solve_assignment(const CostMatrix& cost);

/// Cost of a given matching, accumulated in row order.
double assignment_cost(const CostMatrix& cost, const std::vector<int>& col_of_row);

/// W1 via the equal-weight expansion: both measures become m-point lists
/// (m = common denominator of all weights) and W1 = min-cost matching / m.
double w1(const GeodesicSpace& space, const RationalMeasure& mu1, const RationalMeasure& mu2,
          std::int64_t denominator_cap = 64);

/// Exhaustive minimum over all m! matchings; m <= 8.
double w1_bruteforce(const GeodesicSpace& space, const RationalMeasure& mu1, const RationalMeasure& mu2);

/// Shared expansion size of two measures.
std::int64_t joint_denominator(const RationalMeasure& mu1, const RationalMeasure& mu2);

}  // namespace busemann
