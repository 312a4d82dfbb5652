#include "run_config.hpp"

#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "isingcn/errors.hpp"

namespace isingcn::cli {

namespace {

double parse_number(const std::string& token) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw InvalidInput(fmt::format("not a number: '{}'", token));
  }
  if (used != token.size()) throw InvalidInput(fmt::format("not a number: '{}'", token));
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  if (text.empty()) throw InvalidInput("grid is empty");
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw InvalidInput("grid range must be start:stop:step");
    const double start = parse_number(parts[0]);
    const double stop = parse_number(parts[1]);
    const double step = parse_number(parts[2]);
    if (!(step > 0.0) || stop < start) throw InvalidInput("grid range needs step > 0, stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = start + static_cast<double>(i) * step;
    return grid;
  }
  std::vector<double> grid;
  for (const auto& token : split(text, ','))
    if (!token.empty()) grid.push_back(parse_number(token));
  if (grid.empty()) throw InvalidInput("grid is empty");
  return grid;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw InvalidInput(fmt::format("range must be k1:k2, got '{}'", text));
  const double a = parse_number(parts[0]);
  const double b = parse_number(parts[1]);
  if (a < 1 || b < a || std::floor(a) != a || std::floor(b) != b)
    throw InvalidInput(fmt::format("range must be integers 1 <= k1 <= k2, got '{}'", text));
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

void RunConfig::validate() const {
  if (n < 2) throw InvalidInput("--n must be at least 2");
  if (!(delta_omega > 0.0)) throw InvalidInput("--delta-omega must be positive");
  if (!(rabi > 0.0)) throw InvalidInput("--rabi must be positive");
  if (!(threshold >= 0.0)) throw InvalidInput("--threshold must be non-negative");
  if (report_threshold && !(*report_threshold >= 0.0))
    throw InvalidInput("--report-threshold must be non-negative");
  if (!(epsilon0 >= 0.0)) throw InvalidInput("--epsilon0 must be non-negative");
  if (distort_mode != "none") {
    distortion_mode_from_string(distort_mode);
    if (distort_range.empty()) throw InvalidInput("--distort-range is required with --distort-mode");
    parse_range(distort_range);
  }
}

double RunConfig::effective_report_threshold() const {
  if (report_threshold) return *report_threshold;
  return threshold > 0.0 ? threshold : kDefaultPruneThreshold;
}

std::optional<DistortionSpec> RunConfig::distortion() const {
  if (distort_mode == "none") return std::nullopt;
  const auto [first, last] = parse_range(distort_range);
  DistortionSpec d;
  d.mode = distortion_mode_from_string(distort_mode);
  d.first = first;
  d.last = last;
  d.epsilon0 = epsilon0;
  d.seed = seed;
  d.freeze_tau = freeze_tau;
  return d;
}

ExperimentConfig RunConfig::experiment_config() const {
  ExperimentConfig cfg;
  cfg.n = n;
  cfg.spacing = delta_omega;
  cfg.omega0 = omega0;
  cfg.rabi = rabi;
  cfg.prune_threshold = threshold;
  cfg.report_threshold = effective_report_threshold();
  cfg.convention = convention;
  cfg.distortion = distortion();
  return cfg;
}

SweepSettings RunConfig::sweep_settings() const {
  SweepSettings s;
  s.base = experiment_config();
  s.base.distortion.reset();
  s.block_first = block_first;
  s.block_length = block_length;
  s.epsilon0 = epsilon0;
  s.seed = seed;
  s.freeze_tau = freeze_tau;
  return s;
}

}  // namespace isingcn::cli
