#include "commands.hpp"

#include <chrono>
#include <filesystem>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "isingcn/errors.hpp"
#include "isingcn/io.hpp"

namespace isingcn::cli {

namespace {

std::string out_path(const RunConfig& config, const std::string& name) {
  return (std::filesystem::path(config.out) / name).string();
}

void ensure_out_dir(const RunConfig& config) {
  std::error_code ec;
  std::filesystem::create_directories(config.out, ec);
  if (ec) throw InvalidInput(fmt::format("cannot create output directory '{}'", config.out));
}

void warn_validity(const RunConfig& config, std::ostream& err) {
  const auto params = ChainParams::uniform(config.n, config.delta_omega, config.omega0);
  if (auto w = params.validity_warning()) fmt::print(err, "warning: {}\n", *w);
}

// Runs `body`, mapping library exceptions onto exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const AddressingError& e) {
    fmt::print(err, "addressing error: {}\n", e.what());
    return 2;
  } catch (const NumericalIntegrityError& e) {
    fmt::print(err, "numerical integrity error: {}\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 1;
  }
}

}  // namespace

int cmd_compile(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    warn_validity(config, err);
    const auto params = ChainParams::uniform(config.n, config.delta_omega, config.omega0);
    auto seq = compile_cn_remote(params, config.rabi);
    if (auto d = config.distortion()) seq = distort(seq, *d);
    ensure_out_dir(config);
    write_text_file(out_path(config, "sequence.json"), sequence_to_json(seq));
    fmt::print(out, "L={}\n", seq.pi_count());
    fmt::print(out, "first pi frequencies: {} {} {}\n",
               seq.pi_count() > 0 ? format_double(seq.pulses[1].omega) : "-",
               seq.pi_count() > 1 ? format_double(seq.pulses[2].omega) : "-",
               seq.pi_count() > 2 ? format_double(seq.pulses[3].omega) : "-");
    return 0;
  });
}

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    warn_validity(config, err);
    const auto started = std::chrono::steady_clock::now();
    const auto result = run_experiment(config.experiment_config());
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    const auto& report = result.report;
    std::vector<double> probs;
    for (const auto& u : report.unwanted) probs.push_back(u.probability);
    BandSummary bands{{}, kBandGapDecades};
    if (!probs.empty()) bands = detect_bands(probs);
    const auto profile = excitation_profile(report, bands);

    ensure_out_dir(config);
    write_text_file(out_path(config, "sequence.json"), sequence_to_json(result.sequence));
    write_text_file(out_path(config, "report.json"), report_json(report, bands, profile));
    write_text_file(out_path(config, "unwanted.csv"), unwanted_csv(report));
    write_text_file(out_path(config, "trace.csv"), trace_csv(result.run.trace));

    const double scale = report.scale();
    fmt::print(out,
               "N={} L={} convention={} p_ground={} p_target={} unwanted={} bands={} "
               "pruned_mass={} wall_time={:.3f}s\n",
               config.n, result.sequence.pi_count(), to_string(report.convention),
               format_double(report.p_ground * scale), format_double(report.p_target * scale),
               report.unwanted.size(), bands.bands.size(),
               format_double(report.pruned_mass * scale), seconds);
    if (report.accounting_defect() > 1e-6) {
      fmt::print(err, "probability accounting off by {}\n", report.accounting_defect());
      return 1;
    }
    return 0;
  });
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    warn_validity(config, err);
    const auto kind = sweep_kind_from_string(config.experiment);
    const auto grid = parse_grid(config.grid);
    const auto rows = sweep(kind, grid, config.sweep_settings());
    ensure_out_dir(config);
    write_text_file(out_path(config, "sweep.csv"), sweep_csv(rows));
    int failed = 0;
    for (const auto& r : rows) {
      if (!r.error) continue;
      ++failed;
      fmt::print(err, "point {}={}: {}\n", r.knob_name, r.knob_value, *r.error);
    }
    fmt::print(out, "experiment={} points={} failed={}\n", to_string(kind), rows.size(), failed);
    return failed == 0 ? 0 : 1;
  });
}

int cmd_oracle_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const auto checks = run_oracle_checks(config);
    bool ok = true;
    for (const auto& c : checks) {
      fmt::print(out, "{} {:<34} measured={:.3e} tolerance={:.3e}\n", c.passed ? "PASS" : "FAIL",
                 c.name, c.measured, c.tolerance);
      ok = ok && c.passed;
    }
    return ok ? 0 : 1;
  });
}

}  // namespace isingcn::cli
