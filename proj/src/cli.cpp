#include "busemann/cli.hpp"

#include <fstream>
#include <sstream>

#include "busemann/barycenter.hpp"
#include "busemann/ergodic.hpp"
#include "busemann/fixtures.hpp"
#include "busemann/hull_probe.hpp"
#include "busemann/transport.hpp"

namespace busemann {

namespace {

struct Output {
  Json json;
  std::string csv;
  int status = kExitOk;
};

double config_tol(const ExperimentConfig& c) {
  double tol = 1e-6;
  if (c.document.contains("tol")) {
    if (!c.document["tol"].is_number()) throw ConfigError("tol", "expected a number");
    tol = c.document["tol"].get<double>();
  }
  if (c.tol) tol = *c.tol;
  if (!(tol > 0.0)) throw ConfigError("tol", "tolerance must be positive");
  return tol;
}

std::uint64_t config_seed(const ExperimentConfig& c) {
  std::uint64_t seed = 0;
  if (c.document.contains("seed")) {
    if (!c.document["seed"].is_number_unsigned()) throw ConfigError("seed", "expected a nonnegative integer");
    seed = c.document["seed"].get<std::uint64_t>();
  }
  if (c.seed) seed = *c.seed;
  return seed;
}

const Json& need(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw ConfigError(key, "missing field");
  return doc[key];
}

int int_field(const Json& doc, const char* key, int fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc[key].is_number_integer()) throw ConfigError(key, "expected an integer");
  return doc[key].get<int>();
}

std::string key_value_csv(const Json& j) {
  std::string s = "field,value\n";
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string v = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
    if (v.find_first_of(",\"") != std::string::npos) {
      std::string q;
      for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      v = "\"" + q + "\"";
    }
    s += it.key() + "," + v + "\n";
  }
  return s;
}

std::string quoted(const std::string& s) {
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

State omega_from(const Json& doc, const DynamicalSystem& system, std::uint64_t seed) {
  if (!doc.contains("omega")) {
    CounterRng rng(seed);
    return system.sample(rng);
  }
  const Json& w = doc["omega"];
  if (w.is_number()) return {w.get<double>(), 0.0};
  if (w.is_array() && w.size() == 2 && w[0].is_number() && w[1].is_number())
    return {w[0].get<double>(), w[1].get<double>()};
  throw ConfigError("omega", "expected a number or [w1, w2]");
}

Output run_fixtures_command(double tol) {
  const auto results = run_fixtures(std::min(tol, 1e-9));
  Output o;
  o.json = fixtures_to_json(results);
  o.csv = "name,measured,expected,tolerance,relation,passed,informational\n";
  for (const auto& r : results)
    o.csv += r.name + "," + format_double(r.measured) + "," + format_double(r.expected) + "," +
             format_double(r.tolerance) + "," + r.relation + "," + (r.passed ? "true" : "false") + "," +
             (r.informational ? "true" : "false") + "\n";
  o.status = fixtures_passed(results) ? kExitOk : kExitFailure;
  return o;
}

Output run_bary(const Json& doc, double tol) {
  const auto space = space_from_json(need(doc, "space"));
  BarycenterReport r;
  Json j;
  if (doc.contains("family")) {
    r = bar_n(*space, family_from_json(*space, doc["family"], "family"), tol);
    j["operation"] = "bar_n";
  } else {
    const RationalMeasure mu = measure_from_json(*space, need(doc, "measure"), "measure");
    const Json opts = doc.contains("options") ? doc["options"] : Json();
    r = bar_star(*space, mu, tol, bar_star_options_from_json(opts, "options"));
    j["operation"] = "bar_star";
  }
  j["report"] = report_to_json(*space, r);
  Output o;
  o.json = j;
  Json flat = j["report"];
  flat["point"] = point_to_string(*space, r.point);
  o.csv = key_value_csv(flat);
  return o;
}

Output run_w1(const Json& doc) {
  const auto space = space_from_json(need(doc, "space"));
  const RationalMeasure mu1 = measure_from_json(*space, need(doc, "mu1"), "mu1");
  const RationalMeasure mu2 = measure_from_json(*space, need(doc, "mu2"), "mu2");
  const std::int64_t cap = doc.contains("denominator_cap") ? need(doc, "denominator_cap").get<std::int64_t>() : 64;
  Json j{{"w1", w1(*space, mu1, mu2, cap)}, {"expansion_size", joint_denominator(mu1, mu2)}};
  if (doc.value("bruteforce", false)) j["w1_bruteforce"] = w1_bruteforce(*space, mu1, mu2);
  Output o;
  o.json = j;
  o.csv = key_value_csv(j);
  return o;
}

std::vector<int> grid_from(const Json& doc) {
  std::vector<int> grid;
  if (!doc.contains("n_grid")) {
    for (int n = 1; n <= 256; n *= 2) grid.push_back(n);
    return grid;
  }
  const Json& g = doc["n_grid"];
  if (!g.is_array() || g.empty()) throw ConfigError("n_grid", "expected a nonempty array");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].is_number_integer()) throw ConfigError("n_grid[" + std::to_string(i) + "]", "expected an integer");
    grid.push_back(g[i].get<int>());
  }
  return grid;
}

Output run_ergodic(const Json& doc, double tol, std::uint64_t seed) {
  const auto space = space_from_json(need(doc, "space"));
  const DynamicalSystem system = system_from_json(need(doc, "system"));
  const Observable phi = observable_from_json(*space, need(doc, "observable"));
  const State omega = omega_from(doc, system, seed);
  const BarStarOptions opts = bar_star_options_from_json(doc.contains("options") ? doc["options"] : Json(), "options");
  const ConvergenceReport rep = convergence_diagnostics(system, phi, omega, grid_from(doc), tol, opts);
  Output o;
  Json rows = Json::array();
  o.csv = "n,point_serialized,distance_to_candidate\n";
  for (const auto& r : rep.rows) {
    rows.push_back({{"n", r.n}, {"point", point_to_json(*space, r.point)}, {"distance_to_candidate", r.distance}});
    o.csv += std::to_string(r.n) + "," + quoted(point_to_string(*space, r.point)) + "," + format_double(r.distance) + "\n";
  }
  o.json = {{"omega", {omega[0], omega[1]}},
            {"candidate", point_to_json(*space, rep.candidate)},
            {"candidate_kind", rep.candidate_kind},
            {"rows", rows}};
  return o;
}

Output run_probe(const Json& doc, double tol, std::uint64_t seed) {
  const std::string kind = need(doc, "probe").is_string() ? doc["probe"].get<std::string>() : "";
  Output o;
  if (kind == "hull") {
    const auto space = space_from_json(need(doc, "space"));
    const FiniteFamily fam = family_from_json(*space, need(doc, "family"), "family");
    const auto diams = convex_hull_diameter_probe(*space, fam.points(), int_field(doc, "depth", 3),
                                                  int_field(doc, "samples_per_level", 32), seed);
    o.json = {{"probe", kind}, {"diameters", diams}};
    o.csv = "level,diameter\n";
    for (std::size_t i = 0; i < diams.size(); ++i) o.csv += std::to_string(i) + "," + format_double(diams[i]) + "\n";
    return o;
  }
  if (kind == "temperedness") {
    const std::string g = doc.value("group", std::string("Z"));
    if (g != "Z" && g != "Z2") throw ConfigError("group", "expected \"Z\" or \"Z2\"");
    const auto rep = temperedness_check(g == "Z" ? Group::Z : Group::Z2, int_field(doc, "max_n", 64));
    Json rows = Json::array();
    o.csv = "n,union_size,window_size,ratio\n";
    for (const auto& r : rep.per_n) {
      rows.push_back({{"n", r.n}, {"union_size", r.union_size}, {"window_size", r.window_size}, {"ratio", r.ratio}});
      o.csv += std::to_string(r.n) + "," + std::to_string(r.union_size) + "," + std::to_string(r.window_size) + "," +
               format_double(r.ratio) + "\n";
    }
    o.json = {{"probe", kind}, {"group", g}, {"c_observed", rep.c_observed}, {"rows", rows}};
    return o;
  }
  if (kind == "preservation") {
    const DynamicalSystem system = system_from_json(need(doc, "system"));
    const auto rep = measure_preservation_check(system, int_field(doc, "samples", 10000), seed);
    o.json = {{"probe", kind},
              {"max_bin_deviation", rep.max_bin_deviation},
              {"threshold", rep.threshold},
              {"max_inverse_error", rep.max_inverse_error},
              {"passed", rep.passed}};
    o.csv = key_value_csv(o.json);
    o.status = rep.passed ? kExitOk : kExitFailure;
    return o;
  }
  if (kind == "maximal_gap") {
    const auto space = space_from_json(need(doc, "space"));
    const DynamicalSystem system = system_from_json(need(doc, "system"));
    const Observable phi = observable_from_json(*space, need(doc, "observable"), "observable");
    const Observable psi = observable_from_json(*space, need(doc, "observable2"), "observable2");
    std::vector<double> lambdas;
    if (doc.contains("lambdas")) lambdas = doc["lambdas"].get<std::vector<double>>();
    const BarStarOptions opts = bar_star_options_from_json(doc.contains("options") ? doc["options"] : Json(), "options");
    const auto rep = maximal_gap_probe(system, phi, psi, int_field(doc, "omega_samples", 16), int_field(doc, "max_n", 16),
                                       tol, seed, lambdas, opts);
    Json rows = Json::array();
    o.csv = "lambda,probability,ratio\n";
    for (const auto& r : rep.rows) {
      rows.push_back({{"lambda", r.lambda}, {"probability", r.probability}, {"ratio", r.ratio}});
      o.csv += format_double(r.lambda) + "," + format_double(r.probability) + "," + format_double(r.ratio) + "\n";
    }
    o.json = {{"probe", kind}, {"d1", rep.d1}, {"sups", rep.sups}, {"rows", rows}};
    return o;
  }
  if (kind == "contraction") {
    const auto space = space_from_json(need(doc, "space"));
    const DynamicalSystem system = system_from_json(need(doc, "system"));
    const Observable phi = observable_from_json(*space, need(doc, "observable"), "observable");
    const Observable psi = observable_from_json(*space, need(doc, "observable2"), "observable2");
    const BarStarOptions opts = bar_star_options_from_json(doc.contains("options") ? doc["options"] : Json(), "options");
    const auto est = contraction_estimate(system, phi, psi, int_field(doc, "n", 16), int_field(doc, "samples", 32), tol,
                                          seed, opts);
    o.json = {{"probe", kind},
              {"mean_gap", est.mean_gap},
              {"gap_stderr", est.gap_stderr},
              {"d1", est.d1},
              {"d1_stderr", est.d1_stderr}};
    o.csv = key_value_csv(o.json);
    return o;
  }
  throw ConfigError("probe", "expected one of hull, temperedness, preservation, maximal_gap, contraction");
}

}  // namespace

Json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

int run_experiment(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "json" && config.format != "csv")
      throw ConfigError("format", "expected json or csv");
    const Json& doc = config.document;
    if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");
    if (doc.contains("command") && doc["command"] != config.command)
      throw ConfigError("command", "config is for '" + doc["command"].dump() + "', not '" + config.command + "'");
    const double tol = config_tol(config);
    const std::uint64_t seed = config_seed(config);
    Output o;
    if (config.command == "fixtures")
      o = run_fixtures_command(tol);
    else if (config.command == "bary")
      o = run_bary(doc, tol);
    else if (config.command == "w1")
      o = run_w1(doc);
    else if (config.command == "ergodic")
      o = run_ergodic(doc, tol, seed);
    else if (config.command == "probe")
      o = run_probe(doc, tol, seed);
    else
      throw ConfigError("command", "unknown command '" + config.command + "'");

    const std::string text = config.format == "csv" ? o.csv : o.json.dump(2) + "\n";
    if (config.out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(config.out_path, std::ios::binary);
      if (!f) throw ConfigError("out", "cannot write '" + config.out_path + "'");
      f << text;
    }
    return o.status;
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << config.command << ": resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const UnsupportedError& e) {
    err << config.command << ": unsupported: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << config.command << ": invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace busemann
