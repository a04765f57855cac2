#pragma once

#include <memory>
#include <string>

#include "json.hpp"

#include "busemann/barycenter.hpp"
#include "busemann/errors.hpp"
#include "busemann/ergodic.hpp"
#include "busemann/family.hpp"
#include "busemann/space.hpp"

namespace busemann {

using Json = nlohmann::json;

/// Malformed configuration; `path` names the offending field, e.g. "mu1.atoms[2].weight".
class ConfigError : public DomainError {
 public:
  ConfigError(const std::string& path, const std::string& what)
      : DomainError(path.empty() ? what : path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Parses JSON text; syntax errors become ConfigError with line and column.
Json parse_json_text(const std::string& text, const std::string& source);

/// {"type": "euclidean", "dim": d} | {"type": "halfplane"} | {"type": "tripod", "length": l}
/// | {"type": "tree", "vertices": [...], "edges": [[u, v, len], ...]}. A document with
/// "vertices" and "edges" but no "type" is read as a tree.
std::unique_ptr<GeodesicSpace> space_from_json(const Json& j, const std::string& path = "space");
Json space_to_json(const GeodesicSpace& space);

/// {"space": kind, "coords": [...]} or, on trees, {"space": "tree", "edge": [u, v], "offset": r}
/// with the offset measured from u. Trees also accept {"vertex": name}; Euclidean spaces a bare array.
Point point_from_json(const GeodesicSpace& space, const Json& j, const std::string& path = "point");
Json point_to_json(const GeodesicSpace& space, const Point& p);
/// Compact single-line form, used in CSV cells.
std::string point_to_string(const GeodesicSpace& space, const Point& p);

FiniteFamily family_from_json(const GeodesicSpace& space, const Json& j, const std::string& path = "family");

/// {"atoms": [{"point": ..., "weight": "p/q"}, ...]}
RationalMeasure measure_from_json(const GeodesicSpace& space, const Json& j, const std::string& path = "measure");
Json measure_to_json(const GeodesicSpace& space, const RationalMeasure& mu);

Json report_to_json(const GeodesicSpace& space, const BarycenterReport& r);

/// Reads the optional fields max_replication, box_budget, work_budget,
/// expansion_size, denominator_cap, stop_on_small_gap, fast_path.
BarStarOptions bar_star_options_from_json(const Json& j, const std::string& path = "options");

/// {"type": "golden_rotation"} | {"type": "rotation", "alpha": a}
/// | {"type": "torus", "alpha": [a, b]} | {"type": "permutation", "perm": [...]}
DynamicalSystem system_from_json(const Json& j, const std::string& path = "system");

/// {"type": "finite", "breaks": ["0", "1/2", "1"], "points": [...]} | {"type": "identity"}
/// | {"type": "torus_coordinates"} | {"type": "geodesic_path", "from": p, "to": q}
/// | {"type": "halfplane_circle", "center": [x, y], "radius": r} | {"type": "constant", "point": p}
Observable observable_from_json(const GeodesicSpace& space, const Json& j, const std::string& path = "observable");

/// Shortest decimal form that round-trips.
std::string format_double(double v);

}  // namespace busemann
