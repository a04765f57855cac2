#include "busemann/io.hpp"

#include <charconv>

#include "busemann/euclidean.hpp"
#include "busemann/half_plane.hpp"
#include "busemann/metric_tree.hpp"

namespace busemann {

namespace {

std::string sub(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ConfigError(sub(path, key), "missing field");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  return j.get<double>();
}

std::int64_t integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path, "expected a string");
  return j.get<std::string>();
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array");
  return j;
}

// Rewraps domain errors raised while building an object with the field path.
template <class F>
auto guarded(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const DomainError& e) {
    throw ConfigError(path, e.what());
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json parse_json_text(const std::string& input, const std::string& source) {
  try {
    return Json::parse(input);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min(e.byte == 0 ? 0 : e.byte - 1, input.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (input[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError("", source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
}

std::unique_ptr<GeodesicSpace> space_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  std::string type;
  if (j.contains("type"))
    type = text(j["type"], sub(path, "type"));
  else if (j.contains("vertices") && j.contains("edges"))
    type = "tree";
  else
    throw ConfigError(sub(path, "type"), "missing field");
  return guarded(path, [&]() -> std::unique_ptr<GeodesicSpace> {
    if (type == "euclidean") {
      const auto d = integer(field(j, "dim", path), sub(path, "dim"));
      if (d < 1) throw ConfigError(sub(path, "dim"), "dimension must be >= 1");
      return std::make_unique<EuclideanSpace>(static_cast<std::size_t>(d));
    }
    if (type == "halfplane") return std::make_unique<HalfPlaneSpace>();
    if (type == "tripod") {
      const double len = j.contains("length") ? number(j["length"], sub(path, "length")) : 1.0;
      return std::make_unique<MetricTree>(MetricTree::tripod(len));
    }
    if (type == "tree") {
      std::vector<std::string> names;
      const auto& vs = array(field(j, "vertices", path), sub(path, "vertices"));
      for (std::size_t i = 0; i < vs.size(); ++i) names.push_back(text(vs[i], at(sub(path, "vertices"), i)));
      std::vector<MetricTree::EdgeSpec> edges;
      const auto& es = array(field(j, "edges", path), sub(path, "edges"));
      for (std::size_t i = 0; i < es.size(); ++i) {
        const std::string ep = at(sub(path, "edges"), i);
        if (!es[i].is_array() || es[i].size() != 3) throw ConfigError(ep, "expected [u, v, length]");
        edges.push_back({text(es[i][0], ep + "[0]"), text(es[i][1], ep + "[1]"), number(es[i][2], ep + "[2]")});
      }
      return std::make_unique<MetricTree>(std::move(names), edges);
    }
    throw ConfigError(sub(path, "type"), "unknown space type '" + type + "'");
  });
}

Json space_to_json(const GeodesicSpace& space) {
  if (const auto* e = dynamic_cast<const EuclideanSpace*>(&space)) return {{"type", "euclidean"}, {"dim", e->dim()}};
  if (dynamic_cast<const HalfPlaneSpace*>(&space)) return {{"type", "halfplane"}};
  const auto& t = dynamic_cast<const MetricTree&>(space);
  Json vs = Json::array(), es = Json::array();
  for (std::size_t v = 0; v < t.vertex_count(); ++v) vs.push_back(t.vertex_name(static_cast<int>(v)));
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    const int ei = static_cast<int>(e);
    es.push_back({t.vertex_name(t.edge_parent(ei)), t.vertex_name(t.edge_child(ei)), t.edge_length(ei)});
  }
  return {{"type", "tree"}, {"vertices", vs}, {"edges", es}};
}

Point point_from_json(const GeodesicSpace& space, const Json& j, const std::string& path) {
  return guarded(path, [&]() -> Point {
    if (const auto* e = dynamic_cast<const EuclideanSpace*>(&space)) {
      const Json& c = j.is_array() ? j : field(j, "coords", path);
      const std::string cp = j.is_array() ? path : sub(path, "coords");
      array(c, cp);
      std::vector<double> x;
      for (std::size_t i = 0; i < c.size(); ++i) x.push_back(number(c[i], at(cp, i)));
      if (x.size() != e->dim()) throw ConfigError(cp, "expected " + std::to_string(e->dim()) + " coordinates");
      return e->make(x);
    }
    if (const auto* h = dynamic_cast<const HalfPlaneSpace*>(&space)) {
      const Json& c = j.is_array() ? j : field(j, "coords", path);
      const std::string cp = j.is_array() ? path : sub(path, "coords");
      if (!c.is_array() || c.size() != 2) throw ConfigError(cp, "expected [x, y]");
      return h->make(number(c[0], cp + "[0]"), number(c[1], cp + "[1]"));
    }
    const auto& t = dynamic_cast<const MetricTree&>(space);
    if (j.is_string()) return t.vertex(j.get<std::string>());
    if (j.contains("vertex")) return t.vertex(text(j["vertex"], sub(path, "vertex")));
    const Json& e = field(j, "edge", path);
    if (!e.is_array() || e.size() != 2) throw ConfigError(sub(path, "edge"), "expected [u, v]");
    return t.on_edge(text(e[0], sub(path, "edge[0]")), text(e[1], sub(path, "edge[1]")),
                     number(field(j, "offset", path), sub(path, "offset")));
  });
}

Json point_to_json(const GeodesicSpace& space, const Point& p) {
  if (const auto* e = std::get_if<EuclideanPoint>(&p))
    return {{"space", "euclidean"}, {"coords", std::vector<double>(e->x.begin(), e->x.end())}};
  if (const auto* h = std::get_if<HalfPlanePoint>(&p)) return {{"space", "halfplane"}, {"coords", {h->x, h->y}}};
  const auto& t = dynamic_cast<const MetricTree&>(space);
  const auto& tp = std::get<TreePoint>(p);
  if (tp.edge == TreePoint::kRootEdge) {
    if (t.edge_count() == 0) return {{"space", "tree"}, {"vertex", t.vertex_name(0)}};
    for (std::size_t e = 0; e < t.edge_count(); ++e)
      if (t.edge_parent(static_cast<int>(e)) == 0)
        return {{"space", "tree"},
                {"edge", {t.vertex_name(0), t.vertex_name(t.edge_child(static_cast<int>(e)))}},
                {"offset", 0.0}};
  }
  return {{"space", "tree"},
          {"edge", {t.vertex_name(t.edge_parent(tp.edge)), t.vertex_name(t.edge_child(tp.edge))}},
          {"offset", tp.offset}};
}

std::string point_to_string(const GeodesicSpace& space, const Point& p) {
  if (const auto* e = std::get_if<EuclideanPoint>(&p)) {
    std::string s = "(";
    for (std::size_t i = 0; i < e->x.size(); ++i) s += (i ? " " : "") + format_double(e->x[i]);
    return s + ")";
  }
  if (const auto* h = std::get_if<HalfPlanePoint>(&p)) return "(" + format_double(h->x) + " " + format_double(h->y) + ")";
  const Json j = point_to_json(space, p);
  if (j.contains("vertex")) return j["vertex"].get<std::string>();
  return j["edge"][0].get<std::string>() + "-" + j["edge"][1].get<std::string>() + "@" +
         format_double(j["offset"].get<double>());
}

FiniteFamily family_from_json(const GeodesicSpace& space, const Json& j, const std::string& path) {
  const Json& pts = j.is_object() ? field(j, "points", path) : j;
  const std::string pp = j.is_object() ? sub(path, "points") : path;
  array(pts, pp);
  if (pts.empty()) throw ConfigError(pp, "family must be nonempty");
  std::vector<Point> out;
  for (std::size_t i = 0; i < pts.size(); ++i) out.push_back(point_from_json(space, pts[i], at(pp, i)));
  return FiniteFamily(std::move(out));
}

RationalMeasure measure_from_json(const GeodesicSpace& space, const Json& j, const std::string& path) {
  const auto& atoms = array(field(j, "atoms", path), sub(path, "atoms"));
  std::vector<RationalMeasure::Atom> out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string ap = at(sub(path, "atoms"), i);
    const Point p = point_from_json(space, field(atoms[i], "point", ap), sub(ap, "point"));
    const Json& w = field(atoms[i], "weight", ap);
    const Fraction f = guarded(sub(ap, "weight"), [&] {
      return w.is_number_integer() ? Fraction(w.get<std::int64_t>()) : parse_fraction(text(w, sub(ap, "weight")));
    });
    out.push_back({p, f});
  }
  return guarded(path, [&] { return RationalMeasure(std::move(out)); });
}

Json measure_to_json(const GeodesicSpace& space, const RationalMeasure& mu) {
  Json atoms = Json::array();
  for (const auto& a : mu.atoms())
    atoms.push_back({{"point", point_to_json(space, a.point)}, {"weight", format_fraction(a.weight)}});
  return {{"atoms", atoms}};
}

Json report_to_json(const GeodesicSpace& space, const BarycenterReport& r) {
  return {{"point", point_to_json(space, r.point)},
          {"rounds_per_level", r.rounds_per_level},
          {"replication_level", r.replication_level},
          {"cauchy_gaps", r.cauchy_gaps},
          {"tolerance_used", r.tolerance_used},
          {"initial_diameter", r.initial_diameter},
          {"base_size", r.base_size},
          {"total_size", r.total_size},
          {"tail_estimate", r.tail_estimate},
          {"converged", r.converged},
          {"stop_reason", r.stop_reason},
          {"work", r.work}};
}

BarStarOptions bar_star_options_from_json(const Json& j, const std::string& path) {
  BarStarOptions o;
  if (j.is_null()) return o;
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  auto positive = [&](const char* key) {
    const auto v = integer(j[key], sub(path, key));
    if (v < 0) throw ConfigError(sub(path, key), "must be nonnegative");
    return v;
  };
  if (j.contains("max_replication")) o.max_replication = static_cast<int>(positive("max_replication"));
  if (j.contains("box_budget")) o.box_budget = static_cast<std::uint64_t>(positive("box_budget"));
  if (j.contains("work_budget")) o.work_budget = static_cast<std::uint64_t>(positive("work_budget"));
  if (j.contains("expansion_size")) o.expansion_size = positive("expansion_size");
  if (j.contains("denominator_cap")) o.denominator_cap = positive("denominator_cap");
  if (j.contains("stop_on_small_gap")) {
    if (!j["stop_on_small_gap"].is_boolean()) throw ConfigError(sub(path, "stop_on_small_gap"), "expected a boolean");
    o.stop_on_small_gap = j["stop_on_small_gap"].get<bool>();
  }
  if (j.contains("fast_path")) {
    if (!j["fast_path"].is_boolean()) throw ConfigError(sub(path, "fast_path"), "expected a boolean");
    o.engine.geodesic_fast_path = j["fast_path"].get<bool>();
  }
  return o;
}

DynamicalSystem system_from_json(const Json& j, const std::string& path) {
  const std::string type = text(field(j, "type", path), sub(path, "type"));
  return guarded(path, [&] {
    if (type == "golden_rotation") return DynamicalSystem::golden_rotation();
    if (type == "rotation") return DynamicalSystem::rotation(number(field(j, "alpha", path), sub(path, "alpha")));
    if (type == "torus") {
      const Json& a = field(j, "alpha", path);
      if (!a.is_array() || a.size() != 2) throw ConfigError(sub(path, "alpha"), "expected [a1, a2]");
      return DynamicalSystem::torus_translation(number(a[0], sub(path, "alpha[0]")), number(a[1], sub(path, "alpha[1]")));
    }
    if (type == "permutation") {
      const auto& p = array(field(j, "perm", path), sub(path, "perm"));
      std::vector<int> perm;
      for (std::size_t i = 0; i < p.size(); ++i) perm.push_back(static_cast<int>(integer(p[i], at(sub(path, "perm"), i))));
      return DynamicalSystem::permutation(std::move(perm));
    }
    throw ConfigError(sub(path, "type"), "unknown system type '" + type + "'");
  });
}

Observable observable_from_json(const GeodesicSpace& space, const Json& j, const std::string& path) {
  const std::string type = text(field(j, "type", path), sub(path, "type"));
  return guarded(path, [&] {
    if (type == "finite") {
      const auto& b = array(field(j, "breaks", path), sub(path, "breaks"));
      std::vector<Fraction> breaks;
      for (std::size_t i = 0; i < b.size(); ++i) {
        const std::string bp = at(sub(path, "breaks"), i);
        breaks.push_back(guarded(bp, [&] {
          return b[i].is_number_integer() ? Fraction(b[i].get<std::int64_t>()) : parse_fraction(text(b[i], bp));
        }));
      }
      return Observable::finite_valued(space, std::move(breaks),
                                       family_from_json(space, field(j, "points", path), sub(path, "points")).points());
    }
    if (type == "identity") return Observable::identity(space);
    if (type == "torus_coordinates") return Observable::torus_coordinates(space);
    if (type == "geodesic_path")
      return Observable::geodesic_path(space, point_from_json(space, field(j, "from", path), sub(path, "from")),
                                       point_from_json(space, field(j, "to", path), sub(path, "to")));
    if (type == "halfplane_circle") {
      const Json& c = field(j, "center", path);
      if (!c.is_array() || c.size() != 2) throw ConfigError(sub(path, "center"), "expected [x, y]");
      return Observable::halfplane_circle(space, number(c[0], sub(path, "center[0]")),
                                          number(c[1], sub(path, "center[1]")),
                                          number(field(j, "radius", path), sub(path, "radius")));
    }
    if (type == "constant")
      return Observable::constant(space, point_from_json(space, field(j, "point", path), sub(path, "point")));
    throw ConfigError(sub(path, "type"), "unknown observable type '" + type + "'");
  });
}

}  // namespace busemann
