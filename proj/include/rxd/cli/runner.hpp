#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "rxd/cli/config.hpp"

namespace rxd::cli {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitNumerical = 3, kExitValidate = 4 };

/// Initial state described by config.initial on config's grid.
State initial_state(const RunConfig& config);

/// Normalized config as a JSON document (every effective value, defaults included).
std::string config_echo_json(const RunConfig& config);

/// Executes one run. Artifacts go to the configured paths, the human-readable
/// summary to `out`, diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Loads, parses and runs a config file; config errors map to kExitConfig.
/// `threads` overrides lab.threads when set.
int run_file(const std::string& path, std::ostream& out, std::ostream& err,
             std::optional<unsigned> threads = std::nullopt);

}  // namespace rxd::cli
