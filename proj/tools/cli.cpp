#include "cli.hpp"

#include <CLI11.hpp>
#include <exception>
#include <fstream>
#include <iostream>
#include <ostream>

#include "microga/engine.hpp"
#include "microga/errors.hpp"
#include "microga/harness.hpp"
#include "microga/problems.hpp"
#include "microga/report.hpp"

namespace microga::cli {
namespace {

struct CommonFlags {
  std::string problem = "bitcount";
  unsigned pop_size = 99;
  unsigned generations = 100;
  unsigned mutation = 1;
  std::string mode = "strict";
  std::string out;
};

void add_common(CLI::App& cmd, CommonFlags& flags) {
  cmd.add_option("--problem", flags.problem, "bitcount or pattern:<8 hex digits>")
      ->capture_default_str();
  cmd.add_option("--pop-size", flags.pop_size, "individuals per generation")
      ->capture_default_str();
  cmd.add_option("--generations", flags.generations, "number of generations")
      ->capture_default_str();
  cmd.add_option("--mutation", flags.mutation, "mutation rate per mille")->capture_default_str();
  cmd.add_option("--mode", flags.mode, "compat or strict")->capture_default_str();
  cmd.add_option("--out", flags.out, "output file (default: standard output)");
}

GaConfig make_config(const CommonFlags& flags) {
  GaConfig config;
  config.pop_size = flags.pop_size;
  config.n_generations = flags.generations;
  config.mutation_per_mille = flags.mutation;
  config.mode = parse_mode(flags.mode);
  return config;
}

/// Calls `body` with either `out` or an opened `path`.
template <typename Body>
void with_sink(const std::string& path, std::ostream& out, Body&& body) {
  if (path.empty()) {
    body(out);
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  body(file);
  file.close();
  if (!file) throw IoError("failed to write '" + path + "'");
}

}  // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed-capacity 32-bit genetic algorithm runner"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  std::string run_seed;
  int verbosity = 0;
  std::string format = "paper";
  auto* run_cmd = app.add_subcommand("run", "run one GA and report each generation");
  add_common(*run_cmd, run_flags);
  run_cmd->add_option("--seed", run_seed, "decimal or 0x-prefixed hex seed")->required();
  run_cmd->add_option("--verbosity", verbosity, "paper-format detail, 0..2")
      ->capture_default_str();
  run_cmd->add_option("--format", format, "paper, csv or json")->capture_default_str();

  CommonFlags sweep_flags;
  std::string seeds;
  unsigned jobs = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "run one GA per seed and summarize as CSV");
  add_common(*sweep_cmd, sweep_flags);
  sweep_cmd->add_option("--seeds", seeds, "inclusive range A..B or list a,b,c")->required();
  sweep_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)")->capture_default_str();

  auto* footprint_cmd =
      app.add_subcommand("footprint", "print the engine's memory layout on the 16-bit target");

  // CLI11 parses a reversed argument vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*run_cmd) {
      GaConfig config = make_config(run_flags);
      config.seed = parse_seed(run_seed);
      config.validate();
      const FitnessFunction problem = parse_problem(run_flags.problem);
      const Format fmt = parse_format(format);
      with_sink(run_flags.out, out, [&](std::ostream& sink) {
        Reporter reporter(fmt, verbosity, sink);
        run(config, problem, &reporter);
      });
    } else if (*sweep_cmd) {
      SweepSpec spec;
      spec.base = make_config(sweep_flags);
      spec.seeds = parse_seed_list(seeds);
      spec.problem = sweep_flags.problem;
      const auto rows = run_sweep(spec, jobs);
      with_sink(sweep_flags.out, out, [&](std::ostream& sink) { write_sweep_csv(sink, rows); });
    } else if (*footprint_cmd) {
      write_footprint(out, compute_footprint());
      out.flush();
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace microga::cli
