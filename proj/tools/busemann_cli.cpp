#include <iostream>
#include <optional>
#include <utility>

#include "CLI11.hpp"

#include "busemann/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Inductive barycenters, W1 distances and ergodic averages on Busemann spaces"};
  app.require_subcommand(1);

  std::string config_path, out_path, format = "json";
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  const std::pair<const char*, const char*> commands[] = {
      {"fixtures", "reproduce the tripod reference values"},
      {"bary", "bar_n of a family or bar* of a rational measure"},
      {"w1", "Wasserstein-1 distance between two rational measures"},
      {"ergodic", "convergence table of ergodic averages"},
      {"probe", "hull, temperedness, preservation, maximal_gap or contraction diagnostics"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "JSON experiment config")->check(CLI::ExistingFile);
    sub->add_option("--tol", tol, "tolerance (default 1e-6)");
    sub->add_option("--seed", seed, "64-bit seed for randomized probes");
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : busemann::kExitUsage;
  }

  busemann::ExperimentConfig cfg;
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.tol = tol;
  cfg.seed = seed;
  cfg.out_path = out_path;
  cfg.format = format;
  if (!config_path.empty()) {
    try {
      cfg.document = busemann::load_config_file(config_path);
    } catch (const busemann::ConfigError& e) {
      std::cerr << "usage error: " << e.what() << "\n";
      return busemann::kExitUsage;
    }
  } else if (cfg.command != "fixtures") {
    std::cerr << "usage error: " << cfg.command << " needs --config\n";
    return busemann::kExitUsage;
  }
  return busemann::run_experiment(cfg, std::cout, std::cerr);
}
