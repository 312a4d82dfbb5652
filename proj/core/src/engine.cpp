#include "isingcn/engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

#include "isingcn/errors.hpp"

namespace isingcn {

SparseState::SparseState(BasisState initial) : n_(initial.size()) {
  entries_.push_back({initial, Amplitude{1.0, 0.0}});
  rebuild_index();
  log_new({std::move(initial)}, -1);
}

SparseState SparseState::from_amplitudes(std::vector<Entry> entries) {
  if (entries.empty()) throw InvalidInput("SparseState: empty superposition");
  SparseState out;
  out.n_ = entries.front().state.size();
  double total = 0.0;
  for (const auto& e : entries) {
    if (e.state.size() != out.n_) throw InvalidInput("SparseState: mixed chain lengths");
    total += std::norm(e.amp);
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw InvalidInput(fmt::format("SparseState: superposition norm {} is not 1", total));
  }
  out.entries_ = std::move(entries);
  out.rebuild_index();
  if (out.index_.size() != out.entries_.size())
    throw InvalidInput("SparseState: duplicate basis states");
  std::vector<BasisState> states;
  for (const auto& e : out.entries_) states.push_back(e.state);
  out.log_new(std::move(states), -1);
  return out;
}

double SparseState::norm() const {
  double total = 0.0;
  for (const auto& e : entries_) total += std::norm(e.amp);
  return total;
}

Amplitude SparseState::amplitude(const BasisState& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? Amplitude{} : entries_[it->second].amp;
}

bool SparseState::contains(const BasisState& s) const { return index_.contains(s); }

std::int64_t SparseState::generation_index(const BasisState& s) const {
  auto it = gen_index_.find(s);
  return it == gen_index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

void SparseState::rebuild_index() {
  index_.clear();
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].state, i);
}

void SparseState::log_new(std::vector<BasisState> fresh, std::int64_t ordinal) {
  std::sort(fresh.begin(), fresh.end());
  for (auto& s : fresh) {
    if (gen_index_.contains(s)) continue;
    gen_index_.emplace(s, gen_log_.size());
    gen_log_.push_back({std::move(s), ordinal});
  }
}

std::size_t target_spin(const Pulse& pulse, const ChainParams& params) {
  const auto& larmor = params.larmor();
  auto it = std::lower_bound(larmor.begin(), larmor.end(), pulse.omega);
  std::size_t best = 0;
  if (it == larmor.end()) {
    best = larmor.size() - 1;
  } else if (it == larmor.begin()) {
    best = 0;
  } else {
    const auto hi = static_cast<std::size_t>(it - larmor.begin());
    const double d_hi = larmor[hi] - pulse.omega;
    const double d_lo = pulse.omega - larmor[hi - 1];
    if (d_hi == d_lo) {
      throw AddressingError(fmt::format(
          "pulse at {} is equidistant from spins {} and {}", pulse.omega, hi - 1, hi));
    }
    best = d_lo < d_hi ? hi - 1 : hi;
  }
  const double miss = std::abs(pulse.omega - larmor[best]);
  if (miss > params.spacing() / 4) {
    throw AddressingError(
        fmt::format("pulse at {} is {} away from the nearest Larmor frequency (spin {}); the "
                    "addressing window is {}",
                    pulse.omega, miss, best, params.spacing() / 4));
  }
  return best;
}

namespace {

// Detuning E_p - E_m - omega for the pair at spin k whose neighbor sigmas
// sum to `neighbors`. The Larmor term is subtracted first so that a common
// shift of chain and carrier cancels exactly.
double detuning(const ChainParams& params, std::size_t k, int neighbors, double omega) {
  return (params.larmor(k) - omega) + params.j() * neighbors;
}

}  // namespace

PairDetuning pair_detuning(const BasisState& lower, std::size_t k, const Pulse& pulse,
                           const ChainParams& params) {
  if (lower.size() != params.n()) throw InvalidInput("pair_detuning: chain length mismatch");
  if (lower.test(k)) throw InvalidInput("pair_detuning: lower member must have q_k = 0");
  const double gap = flip_energy(lower, k, params);
  if (!(gap > 0.0)) {
    throw InternalError(
        fmt::format("pair_detuning: flipping spin {} does not raise the energy ({})", k, gap));
  }
  return {flip(lower, k), detuning(params, k, neighbor_sigma_sum(lower, k), pulse.omega)};
}

void propagate(SparseState& state, const Pulse& pulse, const ChainParams& params,
               double prune_threshold, std::int64_t ordinal) {
  pulse.validate();
  if (!(prune_threshold >= 0.0)) throw InvalidInput("prune threshold must be non-negative");
  if (state.n_ != params.n()) {
    throw InvalidInput(
        fmt::format("state has {} spins, chain has {}", state.n_, params.n()));
  }
  std::size_t k = 0;
  try {
    k = target_spin(pulse, params);
  } catch (const AddressingError& e) {
    throw AddressingError(fmt::format("pulse {}: {}", ordinal, e.what()));
  }

  // Neighbor sigma sums lie in [-2, 2]; one propagator per value.
  std::array<PairPropagator, 5> props;
  for (int s = -2; s <= 2; ++s)
    props[static_cast<std::size_t>(s + 2)] =
        PairPropagator::make(detuning(params, k, s, pulse.omega), pulse.rabi, pulse.tau);

  auto& entries = state.entries_;
  const std::size_t tracked = entries.size();
  std::vector<char> done(tracked, 0);
  std::vector<SparseState::Entry> fresh;
  BasisState partner;
  const double t0 = state.t_;

  for (std::size_t i = 0; i < tracked; ++i) {
    if (done[i]) continue;
    done[i] = 1;
    const BasisState& s = entries[i].state;
    partner = s;
    partner.flip_in_place(k);
    const auto it = state.index_.find(partner);
    const bool has_partner = it != state.index_.end();
    const Amplitude partner_amp = has_partner ? entries[it->second].amp : Amplitude{};
    const auto& prop = props[static_cast<std::size_t>(neighbor_sigma_sum(s, k) + 2)];

    const bool is_upper = s.test(k);
    const Amplitude c_m = is_upper ? partner_amp : entries[i].amp;
    const Amplitude c_p = is_upper ? entries[i].amp : partner_amp;
    const auto [m_out, p_out] = prop.step(c_m, c_p, t0);
    entries[i].amp = is_upper ? p_out : m_out;
    const Amplitude partner_out = is_upper ? m_out : p_out;
    if (has_partner) {
      entries[it->second].amp = partner_out;
      done[it->second] = 1;
    } else {
      fresh.push_back({partner, partner_out});
    }
  }

  double total = state.pruned_mass_;
  for (const auto& e : entries) total += std::norm(e.amp);
  for (const auto& e : fresh) total += std::norm(e.amp);
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw NumericalIntegrityError(
        fmt::format("pulse {}: norm drifted to {} (tolerance {})", ordinal, total,
                    kNormTolerance));
  }

  bool removed = false;
  std::size_t keep = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double p = std::norm(entries[i].amp);
    if (p < prune_threshold) {
      state.pruned_mass_ += p;
      removed = true;
      continue;
    }
    if (keep != i) entries[keep] = std::move(entries[i]);
    ++keep;
  }
  entries.resize(keep);

  std::vector<BasisState> admitted;
  for (auto& e : fresh) {
    const double p = std::norm(e.amp);
    if (p < prune_threshold) {
      state.pruned_mass_ += p;
      continue;
    }
    admitted.push_back(e.state);
    entries.push_back(std::move(e));
  }

  if (removed) {
    state.rebuild_index();
  } else {
    for (std::size_t i = entries.size() - admitted.size(); i < entries.size(); ++i)
      state.index_.emplace(entries[i].state, i);
  }
  state.log_new(std::move(admitted), ordinal);
  state.t_ += pulse.tau;
}

SparseState apply_pulse(const SparseState& state, const Pulse& pulse, const ChainParams& params,
                        double prune_threshold, std::int64_t ordinal) {
  SparseState out = state;
  propagate(out, pulse, params, prune_threshold, ordinal);
  return out;
}

RunResult run_sequence(const SparseState& initial, std::span<const Pulse> pulses,
                       const ChainParams& params, double prune_threshold) {
  if (pulses.empty()) throw InvalidInput("run_sequence: empty pulse list");
  RunResult result{initial, {}};
  result.trace.reserve(pulses.size());
  for (std::size_t i = 0; i < pulses.size(); ++i) {
    const Pulse& p = pulses[i];
    propagate(result.final_state, p, params, prune_threshold, static_cast<std::int64_t>(i));
    result.trace.push_back({i, p.omega, p.rabi, p.tau, result.final_state.size(),
                            result.final_state.norm(), result.final_state.pruned_mass()});
  }
  return result;
}

}  // namespace isingcn
