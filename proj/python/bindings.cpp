#include <optional>
#include <sstream>
#include <string>
#include <tuple>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "busemann/barycenter.hpp"
#include "busemann/cli.hpp"
#include "busemann/ergodic.hpp"
#include "busemann/errors.hpp"
#include "busemann/io.hpp"
#include "busemann/transport.hpp"

namespace py = pybind11;
using namespace busemann;

namespace {

// Arguments cross the boundary as JSON text in the config-file formats.
Json parse(const std::string& text, const char* what) { return parse_json_text(text, what); }

std::string bar_n_json(const std::string& space, const std::string& family, double tol) {
  const auto s = space_from_json(parse(space, "space"));
  return report_to_json(*s, bar_n(*s, family_from_json(*s, parse(family, "family")), tol)).dump();
}

std::string bar_star_json(const std::string& space, const std::string& measure, double tol,
                          const std::string& options) {
  const auto s = space_from_json(parse(space, "space"));
  const RationalMeasure mu = measure_from_json(*s, parse(measure, "measure"));
  return report_to_json(*s, bar_star(*s, mu, tol, bar_star_options_from_json(parse(options, "options")))).dump();
}

double w1_json(const std::string& space, const std::string& mu1, const std::string& mu2, bool bruteforce) {
  const auto s = space_from_json(parse(space, "space"));
  const RationalMeasure a = measure_from_json(*s, parse(mu1, "mu1"), "mu1");
  const RationalMeasure b = measure_from_json(*s, parse(mu2, "mu2"), "mu2");
  return bruteforce ? w1_bruteforce(*s, a, b) : w1(*s, a, b);
}

double distance_json(const std::string& space, const std::string& p, const std::string& q) {
  const auto s = space_from_json(parse(space, "space"));
  return s->distance(point_from_json(*s, parse(p, "p"), "p"), point_from_json(*s, parse(q, "q"), "q"));
}

std::string geodesic_point_json(const std::string& space, const std::string& p, const std::string& q, double t) {
  const auto s = space_from_json(parse(space, "space"));
  const Point g = s->geodesic_point(point_from_json(*s, parse(p, "p"), "p"), point_from_json(*s, parse(q, "q"), "q"), t);
  return point_to_json(*s, g).dump();
}

std::tuple<int, std::string, std::string> run_json(const std::string& command, const std::string& config,
                                                   std::optional<double> tol, std::optional<std::uint64_t> seed,
                                                   const std::string& format) {
  ExperimentConfig c;
  c.command = command;
  c.tol = tol;
  c.seed = seed;
  c.format = format;
  std::ostringstream out, err;
  try {
    c.document = parse(config, "config");
  } catch (const ConfigError& e) {
    return {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
  }
  const int status = run_experiment(c, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Inductive barycenters, W1 distances and ergodic averages on Busemann spaces";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);
  // DomainError derives from std::domain_error and surfaces as ValueError.

  m.def("bar_n", &bar_n_json, py::arg("space"), py::arg("family"), py::arg("tol"));
  m.def("bar_star", &bar_star_json, py::arg("space"), py::arg("measure"), py::arg("tol"), py::arg("options") = "{}");
  m.def("w1", &w1_json, py::arg("space"), py::arg("mu1"), py::arg("mu2"), py::arg("bruteforce") = false);
  m.def("distance", &distance_json, py::arg("space"), py::arg("p"), py::arg("q"));
  m.def("geodesic_point", &geodesic_point_json, py::arg("space"), py::arg("p"), py::arg("q"), py::arg("t"));
  m.def("temperedness", [](const std::string& group, int max_n) {
    if (group != "Z" && group != "Z2") throw DomainError("group must be Z or Z2");
    return temperedness_check(group == "Z" ? Group::Z : Group::Z2, max_n).c_observed;
  });
  m.def("run", &run_json, py::arg("command"), py::arg("config"), py::arg("tol") = std::nullopt,
        py::arg("seed") = std::nullopt, py::arg("format") = "json");
}
