#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "isingcn/basis_state.hpp"
#include "isingcn/chain.hpp"
#include "isingcn/pulse.hpp"

namespace isingcn {

/// Final two-branch amplitudes of the gate when every pi pulse satisfies
/// the same 2 pi k condition on the ground branch (unnormalized, |c| = 1).
struct AnalyticFinal {
  Amplitude c0;
  Amplitude c1;
  int k;
  std::size_t pulses;
};

AnalyticFinal analytic_final_state(int k, std::size_t pulses);

/// Single-pulse non-resonant transition probability
/// (rabi / omega_e)^2 sin^2(omega_e tau / 2).
double epsilon(double rabi, double delta, double tau);

/// First-order ground-branch probability 1 - sum(eps_i).
double perturbative_c0(std::span<const double> per_pulse_eps);

/// `count` identical pi pulses on `spin` whose carrier sits `ground_detuning`
/// below the spin's ground-state resonance line.
std::vector<Pulse> detuned_pi_train(const ChainParams& params, std::size_t spin,
                                    double ground_detuning, double rabi, std::size_t count);

inline constexpr std::size_t kDenseQubitCap = 12;

/// Dense amplitude vector indexed by the integer value of the basis state.
using DenseVector = std::vector<Amplitude>;

/// Exact propagation of the full amplitude equations over the whole 2^N
/// space: every single-spin transition of every spin is coupled, not only
/// the addressed one. Each rectangular pulse is exponentiated exactly in
/// the frame rotating with its carrier. Returns interaction-picture
/// amplitudes comparable with the sparse engine.
DenseVector dense_reference(const ChainParams& params, std::span<const Pulse> pulses,
                            const DenseVector& initial, std::size_t cap = kDenseQubitCap);

/// Same pairwise two-level dynamics as the sparse engine, on a dense
/// layout with no pruning.
DenseVector dense_restricted_reference(const ChainParams& params, std::span<const Pulse> pulses,
                                       const DenseVector& initial,
                                       std::size_t cap = kDenseQubitCap);

DenseVector dense_basis_vector(std::size_t n, const BasisState& state);
std::uint64_t dense_index(const BasisState& state);
BasisState basis_from_index(std::size_t n, std::uint64_t index);

}  // namespace isingcn
