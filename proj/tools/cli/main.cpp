#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

using isingcn::cli::RunConfig;

namespace {

void add_common(CLI::App& app, RunConfig& cfg, std::string& convention) {
  app.add_option("--n", cfg.n, "Number of spins")->capture_default_str();
  app.add_option("--rabi", cfg.rabi, "Rabi frequency (units of J)")->capture_default_str();
  app.add_option("--delta-omega", cfg.delta_omega, "Larmor spacing between neighbors (units of J)")
      ->capture_default_str();
  app.add_option("--omega0", cfg.omega0, "Larmor frequency of spin 0 (units of J)")
      ->capture_default_str();
  app.add_option("--threshold", cfg.threshold, "Prune threshold on normalized probability")
      ->capture_default_str();
  app.add_option("--report-threshold", cfg.report_threshold,
                 "Reporting threshold on normalized probability (default: --threshold)");
  app.add_option("--convention", convention, "normalized | paper_doubled")
      ->check(CLI::IsMember({"normalized", "paper_doubled"}))
      ->capture_default_str();
  app.add_option("--distort-mode", cfg.distort_mode, "none | fixed_offset | uniform_random")
      ->check(CLI::IsMember({"none", "fixed_offset", "uniform_random"}))
      ->capture_default_str();
  app.add_option("--distort-range", cfg.distort_range, "Distorted pi pulses k1:k2 (1-based)");
  app.add_option("--epsilon0", cfg.epsilon0, "Rabi-frequency offset or random half-width")
      ->capture_default_str();
  app.add_flag("--freeze-tau", cfg.freeze_tau, "Keep nominal durations on distorted pulses");
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--out", cfg.out, "Output directory")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Remote CONTROL-NOT dynamics on an Ising spin chain"};
  app.set_config("--config", "", "key=value configuration file (flags override it)");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string convention = "paper_doubled";

  auto* compile = app.add_subcommand("compile", "Compile the pulse sequence to sequence.json");
  auto* run = app.add_subcommand("run", "Simulate the gate; write report.json, unwanted.csv, trace.csv");
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep; write sweep.csv");
  auto* oracle = app.add_subcommand("oracle-check", "Cross-check the engine against its oracles");

  // Every option lives on the top-level app so the config file can use flat
  // keys; fallthrough lets them appear after the subcommand name.
  for (auto* sub : {compile, run, sweep, oracle}) sub->fallthrough();
  add_common(app, cfg, convention);
  app.add_option("--experiment", cfg.experiment,
                 "Sweep experiment: omega_sweep | block_offset | random_magnitude | random_block_length | "
                    "block_position")
      ->capture_default_str();
  app.add_option("--grid", cfg.grid, "Sweep grid: a,b,c or start:stop:step");
  app.add_option("--block-first", cfg.block_first, "First distorted pi pulse (k1)")
      ->capture_default_str();
  app.add_option("--block-length", cfg.block_length, "Distorted block length beyond k1")
      ->capture_default_str();
  app.add_option("--dense-n", cfg.dense_n, "Chain length for the dense checks")
      ->capture_default_str();
  app.add_flag("--inject-fault", cfg.inject_fault, "Corrupt the propagator (self-test)");

  CLI11_PARSE(app, argc, argv);
  cfg.convention = isingcn::convention_from_string(convention);

  if (compile->parsed()) return isingcn::cli::cmd_compile(cfg, std::cout, std::cerr);
  if (run->parsed()) return isingcn::cli::cmd_run(cfg, std::cout, std::cerr);
  if (sweep->parsed()) return isingcn::cli::cmd_sweep(cfg, std::cout, std::cerr);
  return isingcn::cli::cmd_oracle_check(cfg, std::cout, std::cerr);
}
