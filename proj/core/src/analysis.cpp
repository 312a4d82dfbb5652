#include "isingcn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "isingcn/errors.hpp"

namespace isingcn {

std::string_view to_string(Convention c) {
  return c == Convention::paper_doubled ? "paper_doubled" : "normalized";
}

Convention convention_from_string(std::string_view name) {
  if (name == "paper_doubled") return Convention::paper_doubled;
  if (name == "normalized") return Convention::normalized;
  throw InvalidInput(fmt::format("unknown convention '{}'", name));
}

double RunReport::unwanted_mass() const {
  double total = 0.0;
  for (const auto& u : unwanted) total += u.probability;
  return total;
}

double RunReport::accounting_defect() const {
  return std::abs(p_ground + p_target + unwanted_mass() + below_report_mass + pruned_mass - 1.0);
}

RunReport classify_final(const SparseState& state, double report_threshold,
                         Convention convention) {
  const std::size_t n = state.n_qubits();
  const BasisState ground(n);
  const BasisState target = BasisState::from_ones(n, {n - 1, 0});

  RunReport report;
  report.n = n;
  report.convention = convention;
  report.pruned_mass = state.pruned_mass();
  for (const auto& e : state.entries()) {
    const double p = std::norm(e.amp);
    if (e.state == ground) {
      report.p_ground = p;
    } else if (e.state == target) {
      report.p_target = p;
    } else if (p >= report_threshold) {
      report.unwanted.push_back({e.state, p, state.generation_index(e.state), e.state.popcount()});
    } else {
      report.below_report_mass += p;
    }
  }
  std::sort(report.unwanted.begin(), report.unwanted.end(),
            [](const auto& a, const auto& b) { return a.generation_index < b.generation_index; });
  return report;
}

int BandSummary::band_of(double p) const {
  for (std::size_t i = 0; i < bands.size(); ++i)
    if (p >= bands[i].min_p && p <= bands[i].max_p) return static_cast<int>(i);
  return -1;
}

namespace {

Band make_band(std::span<const double> descending) {
  const std::size_t c = descending.size();
  const double median = c % 2 == 1 ? descending[c / 2]
                                   : 0.5 * (descending[c / 2 - 1] + descending[c / 2]);
  return {c, descending.back(), median, descending.front()};
}

}  // namespace

BandSummary detect_bands(std::span<const double> probabilities, double gap_decades) {
  if (probabilities.empty()) throw InvalidInput("detect_bands: no probabilities");
  if (!(gap_decades > 0.0)) throw InvalidInput("detect_bands: gap must be positive");
  std::vector<double> sorted(probabilities.begin(), probabilities.end());
  for (double p : sorted)
    if (!(p > 0.0)) throw InvalidInput("detect_bands: probabilities must be positive");
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  BandSummary summary{{}, gap_decades};
  std::size_t start = 0;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    const bool split =
        i == sorted.size() || std::log10(sorted[i - 1]) - std::log10(sorted[i]) > gap_decades;
    if (!split) continue;
    summary.bands.push_back(make_band(std::span(sorted).subspan(start, i - start)));
    start = i;
  }
  return summary;
}

BandSummary detect_sub_bands(std::span<const double> probabilities, const Band& band,
                             double gap_decades) {
  std::vector<double> inside;
  for (double p : probabilities)
    if (p >= band.min_p && p <= band.max_p) inside.push_back(p);
  return detect_bands(inside, gap_decades);
}

ExcitationProfile excitation_profile(const RunReport& report, const BandSummary& bands) {
  ExcitationProfile profile(bands.bands.size());
  for (const auto& u : report.unwanted) {
    const int b = bands.band_of(u.probability);
    if (b >= 0) ++profile[static_cast<std::size_t>(b)][u.excitation_count];
  }
  return profile;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  const auto params = ChainParams::uniform(config.n, config.spacing, config.omega0);
  PulseSequence seq = compile_cn_remote(params, config.rabi);
  if (config.distortion) seq = distort(seq, *config.distortion);
  RunResult run = run_sequence(SparseState(BasisState(config.n)), seq.pulses, params,
                               config.prune_threshold);
  RunReport report = classify_final(run.final_state, config.report_threshold, config.convention);
  return {std::move(seq), std::move(run), std::move(report)};
}

std::string_view to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::omega_sweep: return "omega_sweep";
    case SweepKind::block_offset: return "block_offset";
    case SweepKind::random_magnitude: return "random_magnitude";
    case SweepKind::random_block_length: return "random_block_length";
    case SweepKind::block_position: return "block_position";
  }
  return "omega_sweep";
}

SweepKind sweep_kind_from_string(std::string_view name) {
  for (auto k : {SweepKind::omega_sweep, SweepKind::block_offset, SweepKind::random_magnitude,
                 SweepKind::random_block_length, SweepKind::block_position}) {
    if (to_string(k) == name) return k;
  }
  throw InvalidInput(fmt::format("unknown sweep experiment '{}'", name));
}

namespace {

std::size_t as_count(double v, std::string_view knob) {
  if (!(v >= 0.0) || std::floor(v) != v)
    throw InvalidInput(fmt::format("{} must be a non-negative integer, got {}", knob, v));
  return static_cast<std::size_t>(v);
}

std::string_view knob_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::omega_sweep: return "rabi";
    case SweepKind::block_offset:
    case SweepKind::random_block_length: return "delta_k";
    case SweepKind::random_magnitude: return "epsilon0";
    case SweepKind::block_position: return "k1";
  }
  return "rabi";
}

ExperimentConfig point_config(SweepKind kind, double v, const SweepSettings& s,
                              std::uint64_t seed) {
  ExperimentConfig cfg = s.base;
  DistortionSpec d;
  d.seed = seed;
  d.freeze_tau = s.freeze_tau;
  d.epsilon0 = s.epsilon0;
  d.mode = DistortionMode::uniform_random;
  d.first = s.block_first;
  d.last = s.block_first + s.block_length;
  switch (kind) {
    case SweepKind::omega_sweep:
      cfg.rabi = v;
      return cfg;
    case SweepKind::block_offset:
      d.mode = DistortionMode::fixed_offset;
      d.last = s.block_first + as_count(v, "delta_k");
      break;
    case SweepKind::random_magnitude:
      d.epsilon0 = v;
      break;
    case SweepKind::random_block_length:
      d.last = s.block_first + as_count(v, "delta_k");
      break;
    case SweepKind::block_position:
      d.first = as_count(v, "k1");
      d.last = d.first + s.block_length;
      break;
  }
  cfg.distortion = d;
  return cfg;
}

}  // namespace

std::vector<SweepRow> sweep(SweepKind kind, std::span<const double> grid,
                            const SweepSettings& settings) {
  if (grid.empty()) throw InvalidInput("sweep: empty grid");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double scale = convention_scale(settings.base.convention);
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::uint64_t seed = settings.seed + i;
    SweepRow row{std::string(knob_name(kind)), grid[i], nan, nan, 0, nan, seed, std::nullopt};
    try {
      const auto result = run_experiment(point_config(kind, grid[i], settings, seed));
      row.c0_sq = result.report.p_ground * scale;
      row.target_sq = result.report.p_target * scale;
      row.unwanted_count = result.report.unwanted.size();
      row.pruned_mass = result.report.pruned_mass * scale;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace isingcn
