#include "isingcn/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "isingcn/errors.hpp"

namespace isingcn {

std::string_view to_string(PulseKind kind) {
  switch (kind) {
    case PulseKind::pi: return "pi";
    case PulseKind::half_pi: return "half_pi";
    case PulseKind::custom: return "custom";
  }
  return "custom";
}

PulseKind pulse_kind_from_string(std::string_view name) {
  if (name == "pi") return PulseKind::pi;
  if (name == "half_pi") return PulseKind::half_pi;
  if (name == "custom") return PulseKind::custom;
  throw InvalidInput(fmt::format("unknown pulse kind '{}'", name));
}

Pulse Pulse::make(double omega, double rabi, PulseKind kind) {
  if (!(rabi > 0.0)) throw InvalidInput("Pulse: Rabi frequency must be positive");
  double angle = 0.0;
  switch (kind) {
    case PulseKind::pi: angle = std::numbers::pi; break;
    case PulseKind::half_pi: angle = std::numbers::pi / 2; break;
    case PulseKind::custom:
      throw InvalidInput("Pulse::make: custom pulses need an explicit duration");
  }
  return Pulse{omega, rabi, angle / rabi, kind};
}

void Pulse::validate() const {
  if (!(rabi > 0.0)) throw InvalidInput("Pulse: Rabi frequency must be positive");
  if (!(tau > 0.0)) throw InvalidInput("Pulse: duration must be positive");
  const double angle = rabi * tau;
  auto check = [&](double nominal) {
    if (std::abs(angle - nominal) > 1e-12) {
      throw InvalidInput(fmt::format("Pulse: rotation {} does not match nominal {} for kind {}",
                                     angle, nominal, to_string(kind)));
    }
  };
  if (kind == PulseKind::pi) check(std::numbers::pi);
  if (kind == PulseKind::half_pi) check(std::numbers::pi / 2);
}

PairPropagator PairPropagator::make(double delta, double rabi, double tau) {
  const double omega_e = std::hypot(rabi, delta);
  if (omega_e == 0.0) return PairPropagator{1.0, 0.0, 0.0, 1.0, delta, 0.0};
  const double half = 0.5 * omega_e * tau;
  const double c = std::cos(half);
  const double s = std::sin(half);
  const double d_ratio = delta / omega_e;
  const double r_ratio = rabi / omega_e;
  const Amplitude phase_m = std::polar(1.0, -0.5 * tau * delta);
  const Amplitude phase_p = std::conj(phase_m);
  PairPropagator p;
  p.delta = delta;
  p.omega_e = omega_e;
  p.a_mm = Amplitude(c, d_ratio * s) * phase_m;
  p.a_pp = Amplitude(c, -d_ratio * s) * phase_p;
  p.a_pm = Amplitude(0.0, r_ratio * s) * phase_p;
  p.a_mp = Amplitude(0.0, r_ratio * s) * phase_m;
  return p;
}

std::pair<Amplitude, Amplitude> PairPropagator::step(Amplitude c_m, Amplitude c_p,
                                                     double t0) const {
  const Amplitude drift = std::polar(1.0, t0 * delta);
  return {a_mm * c_m + a_mp * std::conj(drift) * c_p, a_pm * drift * c_m + a_pp * c_p};
}

double PairPropagator::unitarity_defect() const {
  // Columns (a_mm, a_pm) and (a_mp, a_pp) must be orthonormal.
  const double n0 = std::norm(a_mm) + std::norm(a_pm) - 1.0;
  const double n1 = std::norm(a_mp) + std::norm(a_pp) - 1.0;
  const double cross = std::abs(std::conj(a_mm) * a_mp + std::conj(a_pm) * a_pp);
  return std::max({std::abs(n0), std::abs(n1), cross});
}

}  // namespace isingcn
