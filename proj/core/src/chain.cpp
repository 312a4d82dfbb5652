#include "isingcn/chain.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "isingcn/errors.hpp"

namespace isingcn {

ChainParams ChainParams::uniform(std::size_t n, double spacing, double omega0, double j) {
  if (!(spacing > 0.0)) throw InvalidInput("ChainParams: spacing must be positive");
  std::vector<double> larmor(n);
  for (std::size_t k = 0; k < n; ++k) larmor[k] = omega0 + static_cast<double>(k) * spacing;
  return ChainParams(std::move(larmor), j, spacing);
}

ChainParams::ChainParams(std::vector<double> larmor, double j, std::optional<double> spacing)
    : larmor_(std::move(larmor)), j_(j) {
  if (larmor_.size() < 2) throw InvalidInput("ChainParams: need at least 2 spins");
  if (!(j_ > 0.0)) throw InvalidInput("ChainParams: Ising constant must be positive");
  double min_gap = larmor_[1] - larmor_[0];
  for (std::size_t k = 1; k < larmor_.size(); ++k) {
    const double gap = larmor_[k] - larmor_[k - 1];
    if (!(gap > 0.0)) throw InvalidInput("ChainParams: Larmor frequencies must increase with k");
    min_gap = std::min(min_gap, gap);
  }
  spacing_ = spacing.value_or(min_gap);
  if (!(spacing_ > 0.0)) throw InvalidInput("ChainParams: spacing must be positive");
}

ChainParams ChainParams::shifted(double offset) const {
  std::vector<double> larmor = larmor_;
  for (auto& w : larmor) w += offset;
  return ChainParams(std::move(larmor), j_, spacing_);
}

std::optional<std::string> ChainParams::validity_warning() const {
  if (spacing_ / j_ < kMinSafeSpacing) {
    return fmt::format(
        "spacing/J = {} < {}: neighboring-spin transitions are no longer negligible", spacing_ / j_,
        kMinSafeSpacing);
  }
  return std::nullopt;
}

double LabParams::spacing_in_j() const {
  if (!(delta_f > 0.0) || !(j_hz > 0.0))
    throw InvalidInput("LabParams: delta_f and j_hz must be positive");
  return delta_f / j_hz;
}

ChainParams LabParams::to_chain(std::size_t n) const {
  return ChainParams::uniform(n, spacing_in_j(), f0 / j_hz, 1.0);
}

namespace {

void check_state(const BasisState& state, const ChainParams& params) {
  if (state.size() != params.n()) {
    throw InvalidInput(
        fmt::format("basis state has {} spins, chain has {}", state.size(), params.n()));
  }
}

int sigma(const BasisState& s, std::size_t k) { return s.test(k) ? -1 : 1; }

}  // namespace

double energy(const BasisState& state, const ChainParams& params) {
  check_state(state, params);
  const std::size_t n = params.n();
  double zeeman = 0.0;
  for (std::size_t k = 0; k < n; ++k) zeeman += params.larmor(k) * sigma(state, k);
  int ising = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) ising += sigma(state, k) * sigma(state, k + 1);
  return -0.5 * zeeman - 0.5 * params.j() * ising;
}

int neighbor_sigma_sum(const BasisState& state, std::size_t k) {
  int sum = 0;
  if (k > 0) sum += sigma(state, k - 1);
  if (k + 1 < state.size()) sum += sigma(state, k + 1);
  return sum;
}

double flip_energy(const BasisState& state, std::size_t k, const ChainParams& params) {
  check_state(state, params);
  if (k >= params.n()) throw InvalidInput(fmt::format("spin index {} out of range", k));
  // Raising q_k from 0 costs w_k + J * (sum of neighbor sigmas).
  const double raise = params.larmor(k) + params.j() * neighbor_sigma_sum(state, k);
  return state.test(k) ? -raise : raise;
}

double transition_frequency(const BasisState& state, std::size_t k, const ChainParams& params) {
  return std::abs(flip_energy(state, k, params));
}

std::vector<double> resonant_frequency_set(const ChainParams& params) {
  const std::size_t n = params.n();
  const double j = params.j();
  std::vector<double> lines;
  lines.reserve(3 * n - 2);
  lines.push_back(params.larmor(0) - j);
  lines.push_back(params.larmor(0) + j);
  lines.push_back(params.larmor(n - 1) - j);
  lines.push_back(params.larmor(n - 1) + j);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    lines.push_back(params.larmor(k) - 2 * j);
    lines.push_back(params.larmor(k));
    lines.push_back(params.larmor(k) + 2 * j);
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

double dipole_z_field(const DipoleContext& ctx, std::size_t j) {
  const std::size_t n = ctx.positions.size();
  if (ctx.moments.size() != n)
    throw InvalidInput("dipole_z_field: positions and moments differ in length");
  if (j >= n) throw InvalidInput(fmt::format("dipole_z_field: spin index {} out of range", j));
  const double c = std::cos(ctx.theta);
  const double angular = 3.0 * c * c - 1.0;
  double field = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == j) continue;
    const double r = std::abs(ctx.positions[k] - ctx.positions[j]);
    if (!(r > 0.0)) throw InvalidInput("dipole_z_field: coincident spin positions");
    field += angular / (r * r * r) * ctx.moments[k];
  }
  return field;
}

}  // namespace isingcn
