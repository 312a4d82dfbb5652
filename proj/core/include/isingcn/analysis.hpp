#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isingcn/basis_state.hpp"
#include "isingcn/chain.hpp"
#include "isingcn/engine.hpp"
#include "isingcn/sequence.hpp"

namespace isingcn {

/// How probabilities are reported. `paper_doubled` multiplies every
/// probability by 2, as if the initial superposition were unnormalized.
/// Dynamics never depend on it.
enum class Convention { normalized, paper_doubled };

std::string_view to_string(Convention c);
Convention convention_from_string(std::string_view name);
inline double convention_scale(Convention c) { return c == Convention::paper_doubled ? 2.0 : 1.0; }

struct UnwantedRecord {
  BasisState state;
  double probability;  // normalized
  std::int64_t generation_index;
  std::size_t excitation_count;
};

/// Final-state classification. All stored probabilities are normalized;
/// multiply by scale() for the selected reporting convention.
struct RunReport {
  std::size_t n = 0;
  double p_ground = 0.0;
  double p_target = 0.0;
  std::vector<UnwantedRecord> unwanted;  // ascending generation_index
  double pruned_mass = 0.0;
  /// Tracked probability on unwanted states below the reporting threshold.
  double below_report_mass = 0.0;
  Convention convention = Convention::paper_doubled;

  double scale() const { return convention_scale(convention); }
  double unwanted_mass() const;
  /// |p_ground + p_target + unwanted + below_report + pruned - 1|.
  double accounting_defect() const;
};

/// Separates |0...0> and |10...01> from every other tracked state. Unwanted
/// states with normalized probability below `report_threshold` are folded
/// into below_report_mass.
RunReport classify_final(const SparseState& state, double report_threshold,
                         Convention convention = Convention::paper_doubled);

struct Band {
  std::size_t count;
  double min_p;
  double median_p;
  double max_p;
};

/// Bands ordered from the most to the least probable.
struct BandSummary {
  std::vector<Band> bands;
  double gap_decades;

  /// Band index for a probability inside one of the band ranges, else -1.
  int band_of(double p) const;
};

inline constexpr double kBandGapDecades = 1.0;
inline constexpr double kSubBandGapDecades = 0.5;

/// Log-gap clustering: a new band starts wherever two neighbors in sorted
/// log10 probability are more than `gap_decades` apart.
BandSummary detect_bands(std::span<const double> probabilities,
                         double gap_decades = kBandGapDecades);

/// Sub-band structure of one band (recursive clustering with a finer gap).
BandSummary detect_sub_bands(std::span<const double> probabilities, const Band& band,
                             double gap_decades = kSubBandGapDecades);

/// histogram[band][excitation_count] = number of unwanted states.
using ExcitationProfile = std::vector<std::map<std::size_t, std::size_t>>;

ExcitationProfile excitation_profile(const RunReport& report, const BandSummary& bands);

/// Everything needed to compile, distort and run one gate simulation.
struct ExperimentConfig {
  std::size_t n = 200;
  double spacing = ChainParams::kDefaultSpacing;
  double omega0 = ChainParams::kDefaultOmega0;
  double rabi = 0.1;
  double prune_threshold = kDefaultPruneThreshold;
  double report_threshold = kDefaultPruneThreshold;
  Convention convention = Convention::paper_doubled;
  std::optional<DistortionSpec> distortion;
};

struct ExperimentResult {
  PulseSequence sequence;
  RunResult run;
  RunReport report;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

enum class SweepKind { omega_sweep, block_offset, random_magnitude, random_block_length,
                       block_position };

std::string_view to_string(SweepKind kind);
SweepKind sweep_kind_from_string(std::string_view name);

/// Fixed parameters of the distorted block for the distortion sweeps.
struct SweepSettings {
  ExperimentConfig base;
  std::size_t block_first = 10;   // k1
  std::size_t block_length = 15;  // last = first + block_length
  double epsilon0 = 0.001;
  std::uint64_t seed = 0;         // point i uses seed + i
  bool freeze_tau = false;
};

struct SweepRow {
  std::string knob_name;
  double knob_value;
  double c0_sq;       // in the reporting convention
  double target_sq;   // in the reporting convention
  std::size_t unwanted_count;
  double pruned_mass;
  std::uint64_t seed;
  std::optional<std::string> error;
};

/// One full compile + run per grid value, in grid order. A failing point is
/// recorded with NaN values and its message; the sweep continues.
std::vector<SweepRow> sweep(SweepKind kind, std::span<const double> grid,
                            const SweepSettings& settings);

}  // namespace isingcn
