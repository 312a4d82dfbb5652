#pragma once

#include <complex>
#include <string_view>
#include <utility>

namespace isingcn {

using Amplitude = std::complex<double>;

enum class PulseKind { pi, half_pi, custom };

std::string_view to_string(PulseKind kind);
PulseKind pulse_kind_from_string(std::string_view name);

/// One rectangular, circularly polarized rf pulse.
struct Pulse {
  double omega = 0.0;  // carrier frequency (units of J)
  double rabi = 0.0;   // Rabi frequency (units of J)
  double tau = 0.0;    // duration (units of 1/J)
  PulseKind kind = PulseKind::custom;

  /// Pulse with duration fixed by the nominal rotation angle (pi or pi/2).
  static Pulse make(double omega, double rabi, PulseKind kind);

  /// Throws InvalidInput unless rabi > 0, tau > 0 and the nominal rotation
  /// of pi / half_pi pulses holds to 1e-12.
  void validate() const;

  friend bool operator==(const Pulse&, const Pulse&) = default;
};

/// Exact propagator of the two coupled interaction-picture amplitudes
/// (C_m, C_p) of a single-spin transition over one rectangular pulse.
///
/// The lower member |m> has the addressed spin in |0>, the upper member
/// |p> has it in |1>. With detuning delta = E_p - E_m - omega and
/// omega_e = sqrt(rabi^2 + delta^2), the map from t0 to t0 + tau is
///
///   C_m' = [c + i(d/w) s] e^{-i tau d/2} C_m + i (W/w) s e^{-i t0 d - i tau d/2} C_p
///   C_p' = i (W/w) s e^{+i t0 d + i tau d/2} C_m + [c - i(d/w) s] e^{+i tau d/2} C_p
///
/// with c = cos(w tau/2), s = sin(w tau/2), d = delta, w = omega_e, W = rabi.
/// The t0-independent parts are stored; the t0 phase is applied in step().
struct PairPropagator {
  Amplitude a_mm;
  Amplitude a_mp;  // coefficient of C_p in C_m' at t0 = 0
  Amplitude a_pm;  // coefficient of C_m in C_p' at t0 = 0
  Amplitude a_pp;
  double delta = 0.0;
  double omega_e = 0.0;

  static PairPropagator make(double delta, double rabi, double tau);

  /// Applies the pulse starting at global time t0 to the pair.
  std::pair<Amplitude, Amplitude> step(Amplitude c_m, Amplitude c_p, double t0) const;

  /// Largest entry of |U^dagger U - 1| for the t0 = 0 matrix.
  double unitarity_defect() const;
};

inline std::pair<Amplitude, Amplitude> two_level_step(Amplitude c_m, Amplitude c_p,
                                                      const PairPropagator& prop,
                                                      double t0) {
  return prop.step(c_m, c_p, t0);
}

}  // namespace isingcn
