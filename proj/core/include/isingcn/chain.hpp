#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isingcn/basis_state.hpp"

namespace isingcn {

/// Dimensionless chain model. Frequencies are angular and measured in
/// units of the Ising constant J, times in units of 1/J, hbar = 1.
class ChainParams {
 public:
  /// Below this spacing (in units of J) the single-transition picture
  /// starts to break down and validity_warning() reports it.
  static constexpr double kMinSafeSpacing = 20.0;
  static constexpr double kDefaultOmega0 = 1000.0;
  static constexpr double kDefaultSpacing = 100.0;

  /// Uniform ladder omega_k = omega0 + k * spacing.
  static ChainParams uniform(std::size_t n, double spacing = kDefaultSpacing,
                             double omega0 = kDefaultOmega0, double j = 1.0);

  /// Arbitrary strictly increasing Larmor frequencies. `spacing` is the
  /// nominal neighbor spacing used for addressing windows; if omitted the
  /// smallest neighbor gap is used.
  ChainParams(std::vector<double> larmor, double j = 1.0,
              std::optional<double> spacing = std::nullopt);

  std::size_t n() const noexcept { return larmor_.size(); }
  double j() const noexcept { return j_; }
  double spacing() const noexcept { return spacing_; }
  double larmor(std::size_t k) const { return larmor_.at(k); }
  const std::vector<double>& larmor() const noexcept { return larmor_; }

  /// Same chain with every Larmor frequency moved by `offset`.
  ChainParams shifted(double offset) const;

  /// Non-empty when spacing/J < kMinSafeSpacing.
  std::optional<std::string> validity_warning() const;

 private:
  std::vector<double> larmor_;
  double j_ = 1.0;
  double spacing_ = kDefaultSpacing;
};

/// Laboratory parameters in SI-style units.
struct LabParams {
  double f0 = 430e6;       // Hz
  double delta_f = 10e3;   // Hz
  double j_hz = 100.0;     // J / 2pi, Hz
  double theta = 0.9553166181245093;  // rad, arccos(1/sqrt(3))
  double gamma = 2.6752218744e8;      // rad s^-1 T^-1 (proton)
  double b0 = 10.0;        // T

  /// Spacing in units of J: delta_f / j_hz.
  double spacing_in_j() const;
  /// Converts to a uniform chain; omega_0 = f0 / j_hz.
  ChainParams to_chain(std::size_t n) const;
};

/// Geometry for the static dipolar z-field of a chain.
struct DipoleContext {
  std::vector<double> positions;  // along the chain axis
  std::vector<double> moments;    // z magnetic moments
  double theta = 0.0;             // chain axis vs. field direction
};

/// Diagonal energy (Zeeman + Ising) of a basis state, units of J.
/// With sigma_k = 1 - 2 q_k: E = -1/2 sum w_k s_k - (J/2) sum s_k s_{k+1}.
double energy(const BasisState& state, const ChainParams& params);

/// Sum of sigma over the (one or two) nearest neighbors of spin k.
int neighbor_sigma_sum(const BasisState& state, std::size_t k);

/// Signed energy change E(flip_k(s)) - E(s), evaluated locally.
double flip_energy(const BasisState& state, std::size_t k, const ChainParams& params);

/// |E(flip_k(s)) - E(s)|: one of the 3N-2 resonance lines of the chain.
double transition_frequency(const BasisState& state, std::size_t k,
                            const ChainParams& params);

/// All 3N-2 distinct resonance lines, ascending.
std::vector<double> resonant_frequency_set(const ChainParams& params);

/// Static dipolar z-field at spin j summed over all other spins.
double dipole_z_field(const DipoleContext& ctx, std::size_t j);

}  // namespace isingcn
