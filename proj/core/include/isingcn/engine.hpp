#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "isingcn/basis_state.hpp"
#include "isingcn/chain.hpp"
#include "isingcn/pulse.hpp"

namespace isingcn {

/// Normalized probability floor equal to 1e-6 in the doubled reporting
/// convention (the initial superposition taken without its 1/sqrt(2)).
inline constexpr double kDefaultPruneThreshold = 5e-7;

/// Tolerance on sum |C|^2 + pruned mass = 1 checked before each prune pass.
inline constexpr double kNormTolerance = 1e-9;

struct GenerationRecord {
  BasisState state;
  /// Pulse ordinal at which the state first became tracked; -1 for the
  /// states present in the initial superposition.
  std::int64_t pulse_ordinal;
};

/// Sparse wavefunction in the interaction picture: only the basis states
/// carrying non-negligible probability are stored.
class SparseState {
 public:
  struct Entry {
    BasisState state;
    Amplitude amp;
  };

  SparseState() = default;

  /// Single basis state with amplitude 1 at t = 0.
  explicit SparseState(BasisState initial);

  /// Arbitrary superposition at t = 0. Must be normalized to 1e-9.
  static SparseState from_amplitudes(std::vector<Entry> entries);

  std::size_t n_qubits() const noexcept { return n_; }
  std::size_t size() const noexcept { return entries_.size(); }
  double time() const noexcept { return t_; }
  double pruned_mass() const noexcept { return pruned_mass_; }
  double norm() const;

  /// Amplitude of `s`, zero when untracked.
  Amplitude amplitude(const BasisState& s) const;
  bool contains(const BasisState& s) const;

  /// Entries in storage order (deterministic, insertion order).
  std::span<const Entry> entries() const noexcept { return entries_; }
  const std::vector<GenerationRecord>& generation_log() const noexcept { return gen_log_; }
  /// Index into generation_log() of a state ever tracked, or -1.
  std::int64_t generation_index(const BasisState& s) const;

 private:
  friend void propagate(SparseState&, const Pulse&, const ChainParams&, double, std::int64_t);

  std::size_t n_ = 0;
  std::vector<Entry> entries_;
  std::unordered_map<BasisState, std::size_t, BasisStateHash> index_;
  std::vector<GenerationRecord> gen_log_;
  std::unordered_map<BasisState, std::size_t, BasisStateHash> gen_index_;
  double t_ = 0.0;
  double pruned_mass_ = 0.0;

  void rebuild_index();
  void log_new(std::vector<BasisState> fresh, std::int64_t ordinal);
};

/// Spin whose Larmor frequency is closest to the pulse carrier. Throws
/// AddressingError on a tie or when the winner is farther than spacing/4.
std::size_t target_spin(const Pulse& pulse, const ChainParams& params);

struct PairDetuning {
  BasisState upper;
  double delta;
};

/// Pair (lower, flip_k(lower)) and its detuning E_p - E_m - omega.
/// `lower` must have q_k = 0 and flipping k must raise the energy.
PairDetuning pair_detuning(const BasisState& lower, std::size_t k, const Pulse& pulse,
                           const ChainParams& params);

/// In-place form of apply_pulse().
void propagate(SparseState& state, const Pulse& pulse, const ChainParams& params,
               double prune_threshold = kDefaultPruneThreshold, std::int64_t ordinal = 0);

/// Propagates every tracked pair through one pulse, advances the clock by
/// tau and drops amplitudes with |C|^2 < prune_threshold. `ordinal` labels
/// states that become tracked during this pulse in the generation log.
SparseState apply_pulse(const SparseState& state, const Pulse& pulse, const ChainParams& params,
                        double prune_threshold = kDefaultPruneThreshold,
                        std::int64_t ordinal = 0);

struct TraceRow {
  std::size_t pulse_index;
  double omega;
  double rabi;
  double tau;
  std::size_t tracked_states;
  double norm;
  double pruned_mass_cumulative;
};

struct RunResult {
  SparseState final_state;
  std::vector<TraceRow> trace;
};

/// Folds apply_pulse over `pulses`; pulse i is logged with ordinal i.
RunResult run_sequence(const SparseState& initial, std::span<const Pulse> pulses,
                       const ChainParams& params,
                       double prune_threshold = kDefaultPruneThreshold);

}  // namespace isingcn
