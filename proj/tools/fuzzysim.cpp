#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fuzzysim/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = fuzzysim::cli;

  CLI::App app{"Fuzzy cellular traffic simulator"};
  app.set_version_flag("--version", cli::kToolVersion);
  app.require_subcommand(1);

  std::string config, out, grid, manifest, observations;
  std::uint64_t seed = 0;
  std::int64_t max_steps = 0;
  cli::Options opts;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "Run configuration file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out, "Output file")->required();
    sub->add_option("--seed", seed, "Override the scenario seed");
    sub->add_option("--max-steps", max_steps, "Override the step cap")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", opts.jobs, "Concurrent sweep cells")->check(CLI::PositiveNumber);
  };

  auto* trace = app.add_subcommand("trace", "Per-step CSV trace (t, vehicle, X, V, A, G)");
  add_common(trace);
  auto* compare = app.add_subcommand("compare", "Compare both signal strategies, JSON output");
  add_common(compare);
  auto* report = app.add_subcommand("report", "Delay, stops and queue of one run, CSV output");
  add_common(report);
  auto* sweep = app.add_subcommand("sweep", "Fleet x precision-unit x seed grid, CSV output");
  add_common(sweep);
  sweep->add_option("--grid", grid, "Grid spec file ([grid] section)")->check(CLI::ExistingFile);
  auto* fuzzify = app.add_subcommand("fuzzify", "Fuzzy positions from segment counts");
  fuzzify->add_option("--observations", observations, "CSV of segment_start,segment_end,count")
      ->required()
      ->check(CLI::ExistingFile);
  fuzzify->add_option("--out", out, "Output file")->required();
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("--manifest", manifest, "Manifest written next to an earlier output")
      ->required()
      ->check(CLI::ExistingFile);
  replay->add_option("--out", out, "Write here instead of the recorded output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kConfigError;
  }

  for (auto* sub : {trace, compare, report, sweep}) {
    if (sub->count("--seed")) opts.seed = seed;
    if (sub->count("--max-steps")) opts.max_steps = max_steps;
  }

  if (*trace) return cli::cmd_trace(config, out, opts, std::cerr);
  if (*compare) return cli::cmd_compare(config, out, opts, std::cerr);
  if (*report) return cli::cmd_report(config, out, opts, std::cerr);
  if (*sweep) return cli::cmd_sweep(config, grid, out, opts, std::cerr);
  if (*fuzzify) return cli::cmd_fuzzify(observations, out, std::cerr);
  if (*replay) return cli::cmd_replay(manifest, out, std::cerr);
  return cli::kConfigError;
}
