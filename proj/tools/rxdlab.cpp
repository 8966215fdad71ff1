#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "rxd/cli/acceptance.hpp"
#include "rxd/cli/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rxdlab: simulator and diagnostics lab for u1 + u2 <-> u3 + u4 with a non-diffusing u4"};
  app.require_subcommand(1);

  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads for lab sweeps (overrides RXDLAB_THREADS)");

  std::string config_path;
  auto* run = app.add_subcommand("run", "run the scenario described by an INI config");
  run->add_option("config", config_path, "config file")->required();

  auto* validate = app.add_subcommand("validate", "run the acceptance suite");
  std::string workdir;
  bool skip_2d = false;
  validate->add_option("--workdir", workdir, "scratch directory for reproducibility runs");
  validate->add_flag("--skip-2d", skip_2d, "leave out the 64x64 relaxation run");

  CLI11_PARSE(app, argc, argv);

  const std::optional<unsigned> override = threads ? std::optional<unsigned>(threads) : std::nullopt;
  if (*run) return rxd::cli::run_file(config_path, std::cout, std::cerr, override);

  rxd::cli::AcceptanceOptions opts;
  opts.threads = threads;
  opts.workdir = workdir;
  opts.include_2d = !skip_2d;
  const auto results = rxd::cli::run_acceptance(opts, &std::cout);
  rxd::cli::print_acceptance_table(std::cout, results);
  return rxd::cli::all_passed(results) ? rxd::cli::kExitOk : rxd::cli::kExitValidate;
}
