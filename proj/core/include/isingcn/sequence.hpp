#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "isingcn/chain.hpp"
#include "isingcn/pulse.hpp"

namespace isingcn {

enum class PulseRole { superpose, flip, unflip };

std::string_view to_string(PulseRole role);
PulseRole pulse_role_from_string(std::string_view name);

/// Intent of one compiled pulse and the detunings it sees on the two
/// branches of the gate: the excited (control = 1) branch it is meant to
/// drive and the ground branch it should leave alone.
struct PulseAnnotation {
  std::size_t target_spin = 0;
  PulseRole role = PulseRole::flip;
  double excited_detuning = 0.0;
  double ground_detuning = 0.0;

  friend bool operator==(const PulseAnnotation&, const PulseAnnotation&) = default;
};

struct PulseSequence {
  std::vector<Pulse> pulses;
  std::vector<PulseAnnotation> annotations;

  /// Number of pi pulses (every pulse after the leading pi/2).
  std::size_t pi_count() const noexcept { return pulses.empty() ? 0 : pulses.size() - 1; }

  friend bool operator==(const PulseSequence&, const PulseSequence&) = default;
};

enum class DistortionMode { fixed_offset, uniform_random };

std::string_view to_string(DistortionMode mode);
DistortionMode distortion_mode_from_string(std::string_view name);

/// Rabi-frequency error applied to a contiguous block of pi pulses.
struct DistortionSpec {
  DistortionMode mode = DistortionMode::fixed_offset;
  std::size_t first = 1;  // pi-pulse ordinals, 1-based, inclusive
  std::size_t last = 1;
  double epsilon0 = 0.0;
  std::uint64_t seed = 0;
  /// When set, distorted pulses keep tau = pi / rabi_nominal instead of
  /// refitting tau to the new Rabi frequency.
  bool freeze_tau = false;
};

/// Rabi frequency making a pi pulse a 2 pi k rotation at detuning delta:
/// |delta| / sqrt(4k^2 - 1).
double omega_for_2pik(double delta, int k);

/// CONTROL-NOT between the two chain ends (control N-1, target 0): a pi/2
/// pulse on the control spin followed by 2N-3 pi pulses that walk a flip
/// down the chain in the control = 1 branch.
PulseSequence compile_cn_remote(const ChainParams& params, double rabi);

/// Applies the Rabi-frequency distortion to pi pulses in [first, last].
PulseSequence distort(const PulseSequence& seq, const DistortionSpec& spec);

/// JSON array of {ordinal, kind, omega, rabi, tau, target_spin, role,
/// branch_detunings: {excited, ground}}. Round-trips bit-exactly.
std::string sequence_to_json(const PulseSequence& seq);
PulseSequence sequence_from_json(std::string_view text);

}  // namespace isingcn
