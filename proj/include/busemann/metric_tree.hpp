#pragma once

#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "busemann/space.hpp"

namespace busemann {

/// Finite metric tree. Vertex 0 is the root; every edge is oriented away from
/// it, and a TreePoint's offset is measured from the edge's parent-side vertex.
///
/// Canonical form: offset 0 denotes the parent vertex itself, which is stored
/// as (incoming edge of that vertex, full length), or as the root sentinel.
class MetricTree final : public GeodesicSpace {
 public:
  struct EdgeSpec {
    std::string u;
    std::string v;
    double length;
  };

  /// Throws DomainError unless the edges form a tree on `vertices` with
  /// strictly positive lengths.
  MetricTree(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  /// Star with center "o" and leaves "x", "y", "z" at distance `length`.
  static MetricTree tripod(double length = 1.0);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return length_.size(); }
  const std::string& vertex_name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
  int vertex_index(std::string_view name) const;

  int edge_parent(int e) const { return parent_vertex_.at(static_cast<std::size_t>(e)); }
  int edge_child(int e) const { return child_vertex_.at(static_cast<std::size_t>(e)); }
  double edge_length(int e) const { return length_.at(static_cast<std::size_t>(e)); }
  /// Edge joining u and v in either orientation, or -1.
  int find_edge(int u, int v) const;

  Point vertex(int v) const;
  Point vertex(std::string_view name) const { return vertex(vertex_index(name)); }
  /// Point on edge {u, v} at distance `offset_from_u` from u.
  Point on_edge(std::string_view u, std::string_view v, double offset_from_u) const;
  TreePoint canonical(TreePoint p) const;

  /// Depth of a point below the root.
  double depth(const TreePoint& p) const;

  std::string kind() const override { return "tree"; }
  void validate(const Point& p) const override;
  double distance(const Point& p, const Point& q) const override;
  double distance_to_segment(const Point& a, const Point& b, const Point& p) const override;

 protected:
  Point interpolate(const Point& p, const Point& q, double t) const override;

 private:
  const TreePoint& coords(const Point& p) const;
  int lower_vertex(const TreePoint& p) const;
  int lca(int u, int v) const { return lca_[static_cast<std::size_t>(u) * names_.size() + static_cast<std::size_t>(v)]; }
  /// Depth of the deepest common point of the root paths of p and q.
  double meet_depth(const TreePoint& p, const TreePoint& q) const;
  /// Point at depth h on the root path of p, 0 <= h <= depth(p).
  TreePoint on_root_path(const TreePoint& p, double h) const;

  std::vector<std::string> names_;
  std::vector<int> parent_vertex_;  // per edge
  std::vector<int> child_vertex_;   // per edge
  std::vector<double> length_;      // per edge
  std::vector<int> incoming_edge_;  // per vertex, -1 for the root
  std::vector<double> vertex_depth_;
  std::vector<int> lca_;
};

}  // namespace busemann
