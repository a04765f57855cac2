#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "busemann/space.hpp"

namespace busemann {

using Fraction = boost::rational<std::int64_t>;

/// "p/q" or "p"; throws DomainError on malformed input.
Fraction parse_fraction(const std::string& text);
std::string format_fraction(const Fraction& f);

/// Ordered list of n >= 1 points with multiset semantics.
class FiniteFamily {
 public:
  explicit FiniteFamily(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

 private:
  std::vector<Point> points_;
};

/// Q^k: k concatenated copies of Q.
FiniteFamily replicate(const FiniteFamily& family, int k);

/// Distinct sorted atoms with positive multiplicities.
struct Multiset {
  std::vector<Point> atoms;
  std::vector<int> counts;

  int total() const;
};

/// Sorts atoms and merges exact duplicates.
Multiset canonical_multiset(std::vector<Point> atoms, std::vector<int> counts);
Multiset to_multiset(const FiniteFamily& family);

/// Finitely many distinct atoms with positive rational weights summing to 1.
class RationalMeasure {
 public:
  struct Atom {
    Point point;
    Fraction weight;
  };

  /// Merges duplicate atoms; throws DomainError on nonpositive weights or a
  /// weight sum other than 1.
  explicit RationalMeasure(std::vector<Atom> atoms);

  static RationalMeasure dirac(Point p);
  /// Equal weights 1/n on the family's entries.
  static RationalMeasure uniform(const FiniteFamily& family);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  /// Least common denominator of the weights.
  std::int64_t common_denominator() const;

  /// Multiset of total size n (a multiple of the common denominator) whose
  /// normalized counts equal the weights.
  Multiset expand(std::int64_t n) const;

  /// Same multiset as expand(n), listed atom by atom as a family.
  FiniteFamily expand_family(std::int64_t n) const;

  void validate(const GeodesicSpace& space) const;

 private:
  std::vector<Atom> atoms_;
};

}  // namespace busemann
