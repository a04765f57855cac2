#include "busemann/metric_tree.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "busemann/errors.hpp"

namespace busemann {

MetricTree::MetricTree(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
    : names_(std::move(vertices)) {
  const std::size_t n = names_.size();
  if (n == 0) throw DomainError("tree needs at least one vertex");
  if (edges.size() + 1 != n) throw DomainError("tree needs exactly |vertices| - 1 edges");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (names_[i] == names_[j]) throw DomainError("duplicate vertex name '" + names_[i] + "'");

  struct Half {
    int to;
    int edge;
  };
  std::vector<std::vector<Half>> adj(n);
  std::vector<double> len(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int u = vertex_index(edges[e].u);
    const int v = vertex_index(edges[e].v);
    if (u == v) throw DomainError("tree edge is a loop at '" + edges[e].u + "'");
    if (!(edges[e].length > 0.0) || !std::isfinite(edges[e].length))
      throw DomainError("tree edge lengths must be positive and finite");
    len[e] = edges[e].length;
    adj[static_cast<std::size_t>(u)].push_back({v, static_cast<int>(e)});
    adj[static_cast<std::size_t>(v)].push_back({u, static_cast<int>(e)});
  }

  parent_vertex_.assign(edges.size(), -1);
  child_vertex_.assign(edges.size(), -1);
  length_ = len;
  incoming_edge_.assign(n, -1);
  vertex_depth_.assign(n, 0.0);
  std::vector<int> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<int> order;
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  while (!bfs.empty()) {
    const int u = bfs.front();
    bfs.pop();
    order.push_back(u);
    for (const Half& h : adj[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(h.to)]) continue;
      seen[static_cast<std::size_t>(h.to)] = 1;
      parent[static_cast<std::size_t>(h.to)] = u;
      parent_vertex_[static_cast<std::size_t>(h.edge)] = u;
      child_vertex_[static_cast<std::size_t>(h.edge)] = h.to;
      incoming_edge_[static_cast<std::size_t>(h.to)] = h.edge;
      vertex_depth_[static_cast<std::size_t>(h.to)] =
          vertex_depth_[static_cast<std::size_t>(u)] + len[static_cast<std::size_t>(h.edge)];
      bfs.push(h.to);
    }
  }
  if (order.size() != n) throw DomainError("tree edges do not connect all vertices");

  // All-pairs lowest common ancestors by walking up from the deeper vertex.
  std::vector<int> level(n, 0);
  for (int v : order)
    if (parent[static_cast<std::size_t>(v)] >= 0)
      level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])] + 1;
  lca_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      int x = static_cast<int>(a);
      int y = static_cast<int>(b);
      while (level[static_cast<std::size_t>(x)] > level[static_cast<std::size_t>(y)]) x = parent[static_cast<std::size_t>(x)];
      while (level[static_cast<std::size_t>(y)] > level[static_cast<std::size_t>(x)]) y = parent[static_cast<std::size_t>(y)];
      while (x != y) {
        x = parent[static_cast<std::size_t>(x)];
        y = parent[static_cast<std::size_t>(y)];
      }
      lca_[a * n + b] = lca_[b * n + a] = x;
    }
}

MetricTree MetricTree::tripod(double length) {
  return MetricTree({"o", "x", "y", "z"}, {{"o", "x", length}, {"o", "y", length}, {"o", "z", length}});
}

int MetricTree::vertex_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw DomainError("unknown tree vertex '" + std::string(name) + "'");
}

int MetricTree::find_edge(int u, int v) const {
  for (std::size_t e = 0; e < length_.size(); ++e)
    if ((parent_vertex_[e] == u && child_vertex_[e] == v) || (parent_vertex_[e] == v && child_vertex_[e] == u))
      return static_cast<int>(e);
  return -1;
}

Point MetricTree::vertex(int v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= names_.size()) throw DomainError("tree vertex index out of range");
  const int e = incoming_edge_[static_cast<std::size_t>(v)];
  if (e < 0) return TreePoint{};
  return TreePoint{e, length_[static_cast<std::size_t>(e)]};
}

Point MetricTree::on_edge(std::string_view u, std::string_view v, double offset_from_u) const {
  const int a = vertex_index(u);
  const int b = vertex_index(v);
  const int e = find_edge(a, b);
  if (e < 0) throw DomainError("no tree edge joins '" + std::string(u) + "' and '" + std::string(v) + "'");
  const double len = edge_length(e);
  if (!(offset_from_u >= 0.0 && offset_from_u <= len)) throw DomainError("tree offset outside [0, edge length]");
  const double from_parent = edge_parent(e) == a ? offset_from_u : len - offset_from_u;
  return canonical(TreePoint{e, from_parent});
}

TreePoint MetricTree::canonical(TreePoint p) const {
  if (p.edge == TreePoint::kRootEdge) {
    if (p.offset != 0.0) throw DomainError("root tree point must have offset 0");
    return p;
  }
  if (p.edge < 0 || static_cast<std::size_t>(p.edge) >= length_.size()) throw DomainError("tree edge index out of range");
  const double len = length_[static_cast<std::size_t>(p.edge)];
  if (!(p.offset >= 0.0 && p.offset <= len)) throw DomainError("tree offset outside [0, edge length]");
  if (p.offset == 0.0) return std::get<TreePoint>(vertex(parent_vertex_[static_cast<std::size_t>(p.edge)]));
  return p;
}

const TreePoint& MetricTree::coords(const Point& p) const {
  const auto* t = std::get_if<TreePoint>(&p);
  if (t == nullptr) throw DomainError("point does not belong to a metric tree");
  if (t->edge < TreePoint::kRootEdge || t->edge >= static_cast<int>(length_.size()))
    throw DomainError("tree point refers to an unknown edge");
  if (t->edge == TreePoint::kRootEdge ? t->offset != 0.0
                                      : !(t->offset >= 0.0 && t->offset <= length_[static_cast<std::size_t>(t->edge)]))
    throw DomainError("tree point offset outside its edge");
  return *t;
}

void MetricTree::validate(const Point& p) const {
  const TreePoint& t = coords(p);
  if (!(canonical(t) == t)) throw DomainError("tree point is not in canonical form");
}

double MetricTree::depth(const TreePoint& p) const {
  if (p.edge < 0) return 0.0;
  return vertex_depth_[static_cast<std::size_t>(parent_vertex_[static_cast<std::size_t>(p.edge)])] + p.offset;
}

int MetricTree::lower_vertex(const TreePoint& p) const {
  return p.edge < 0 ? 0 : child_vertex_[static_cast<std::size_t>(p.edge)];
}

double MetricTree::meet_depth(const TreePoint& p, const TreePoint& q) const {
  if (p.edge < 0 || q.edge < 0) return 0.0;
  if (p.edge == q.edge) return depth(p.offset <= q.offset ? p : q);
  const int u = lower_vertex(p);
  const int v = lower_vertex(q);
  const int w = lca(u, v);
  // If p's edge lies on q's root path, the meet is p itself (and symmetrically).
  if (w == u) return depth(p);
  if (w == v) return depth(q);
  return vertex_depth_[static_cast<std::size_t>(w)];
}

double MetricTree::distance(const Point& p, const Point& q) const {
  const TreePoint& a = coords(p);
  const TreePoint& b = coords(q);
  if (a.edge == b.edge) return std::abs(a.offset - b.offset);
  const double m = meet_depth(a, b);
  return std::max(0.0, (depth(a) - m) + (depth(b) - m));
}

TreePoint MetricTree::on_root_path(const TreePoint& p, double h) const {
  if (p.edge < 0 || h <= 0.0) return TreePoint{};
  int e = p.edge;
  while (true) {
    const int parent = parent_vertex_[static_cast<std::size_t>(e)];
    const double base = vertex_depth_[static_cast<std::size_t>(parent)];
    if (h > base) {
      const double len = length_[static_cast<std::size_t>(e)];
      return canonical(TreePoint{e, std::min(h - base, e == p.edge ? p.offset : len)});
    }
    e = incoming_edge_[static_cast<std::size_t>(parent)];
    if (e < 0) return TreePoint{};
  }
}

Point MetricTree::interpolate(const Point& p, const Point& q, double t) const {
  const TreePoint& a = coords(p);
  const TreePoint& b = coords(q);
  if (a == b) return p;
  if (a.edge == b.edge) return canonical(TreePoint{a.edge, a.offset + t * (b.offset - a.offset)});
  const double m = meet_depth(a, b);
  const double up = depth(a) - m;
  const double down = depth(b) - m;
  const double s = t * (up + down);
  if (s <= up) return on_root_path(a, depth(a) - s);
  return on_root_path(b, m + (s - up));
}

double MetricTree::distance_to_segment(const Point& a, const Point& b, const Point& p) const {
  // Half the triangle excess is exactly the distance from p to [a, b] in a tree.
  return std::max(0.0, 0.5 * (distance(a, p) + distance(p, b) - distance(a, b)));
}

}  // namespace busemann
