#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "busemann/io.hpp"

namespace busemann {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitResource = 3 };

struct ExperimentConfig {
  /// fixtures | bary | w1 | ergodic | probe
  std::string command;
  /// Parsed config document; flags below override its "tol" and "seed".
  Json document = Json::object();
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  /// Empty writes to the output stream.
  std::string out_path;
  /// json | csv
  std::string format = "json";
};

/// Reads a config file; errors become ConfigError with file, line and column.
Json load_config_file(const std::string& path);

/// Dispatches to the module operation named by the command and writes the
/// result. Errors go to `err` and map to exit codes: malformed input 2,
/// exhausted budgets 3, failed fixtures 1.
int run_experiment(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

}  // namespace busemann
