#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isingcn/analysis.hpp"
#include "isingcn/sequence.hpp"

namespace isingcn::cli {

/// Settings shared by every subcommand. Frequencies in units of J,
/// probabilities normalized.
struct RunConfig {
  std::size_t n = 200;
  double delta_omega = ChainParams::kDefaultSpacing;
  double omega0 = ChainParams::kDefaultOmega0;
  double rabi = 0.1;
  double threshold = kDefaultPruneThreshold;
  std::optional<double> report_threshold;  // defaults to threshold (or 5e-7 when it is 0)
  Convention convention = Convention::paper_doubled;

  std::string distort_mode = "none";  // none | fixed_offset | uniform_random
  std::string distort_range;          // "k1:k2", pi-pulse ordinals
  double epsilon0 = 0.0;
  bool freeze_tau = false;
  std::uint64_t seed = 0;

  std::string out = ".";
  std::string experiment = "omega_sweep";
  std::string grid;
  std::size_t block_first = 10;
  std::size_t block_length = 15;

  std::size_t dense_n = 6;
  bool inject_fault = false;

  /// Throws InvalidInput on any inconsistent value.
  void validate() const;
  double effective_report_threshold() const;
  std::optional<DistortionSpec> distortion() const;
  ExperimentConfig experiment_config() const;
  SweepSettings sweep_settings() const;
};

/// Parses "a,b,c" or "start:stop:step" (inclusive of stop within 1e-9 of
/// a step).
std::vector<double> parse_grid(const std::string& text);

/// Parses "k1:k2".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text);

}  // namespace isingcn::cli
