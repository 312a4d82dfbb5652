#include "isingcn/oracles.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "isingcn/engine.hpp"
#include "isingcn/errors.hpp"

namespace isingcn {

AnalyticFinal analytic_final_state(int k, std::size_t pulses) {
  if (k < 1) throw InvalidInput("analytic_final_state: k must be >= 1");
  if (pulses < 1) throw InvalidInput("analytic_final_state: need at least one pulse");
  const double root = std::sqrt(4.0 * k * k - 1.0);
  // exp(-i pi L root / 2): reduce the half-turn count modulo 2 first
  const double half_turns = std::fmod(static_cast<double>(pulses) * root * 0.5, 2.0);
  const double sign = (static_cast<std::size_t>(k) * pulses) % 2 == 0 ? 1.0 : -1.0;
  const Amplitude c0 = sign * std::polar(1.0, -std::numbers::pi * half_turns);
  return {c0, Amplitude{-1.0, 0.0}, k, pulses};
}

double epsilon(double rabi, double delta, double tau) {
  const double omega_e = std::hypot(rabi, delta);
  if (omega_e == 0.0) return 0.0;
  const double s = std::sin(0.5 * omega_e * tau);
  const double r = rabi / omega_e;
  return r * r * s * s;
}

double perturbative_c0(std::span<const double> per_pulse_eps) {
  double sum = 0.0;
  for (double e : per_pulse_eps) {
    if (!(e >= 0.0 && e <= 1.0)) throw InvalidInput("perturbative_c0: epsilon outside [0, 1]");
    sum += e;
  }
  return 1.0 - sum;
}

std::vector<Pulse> detuned_pi_train(const ChainParams& params, std::size_t spin,
                                    double ground_detuning, double rabi, std::size_t count) {
  const double line = flip_energy(BasisState(params.n()), spin, params);
  return std::vector<Pulse>(count, Pulse::make(line - ground_detuning, rabi, PulseKind::pi));
}

std::uint64_t dense_index(const BasisState& state) {
  if (state.size() > 63) throw ResourceError("dense_index: chain too long for a dense index");
  return state.words().front();
}

BasisState basis_from_index(std::size_t n, std::uint64_t index) {
  BasisState s(n);
  for (std::size_t k = 0; k < n; ++k)
    if ((index >> k) & 1U) s.set(k, true);
  return s;
}

DenseVector dense_basis_vector(std::size_t n, const BasisState& state) {
  if (state.size() != n) throw InvalidInput("dense_basis_vector: chain length mismatch");
  if (n > 30) throw ResourceError("dense_basis_vector: chain too long");
  DenseVector v(std::size_t{1} << n);
  v[dense_index(state)] = 1.0;
  return v;
}

namespace {

std::size_t check_dense(const ChainParams& params, const DenseVector& initial, std::size_t cap) {
  const std::size_t n = params.n();
  if (n > cap) {
    throw ResourceError(fmt::format("dense oracle: N={} exceeds the cap of {} spins", n, cap));
  }
  const std::size_t dim = std::size_t{1} << n;
  if (initial.size() != dim) {
    throw InvalidInput(
        fmt::format("dense oracle: vector has {} entries, expected {}", initial.size(), dim));
  }
  return dim;
}

int bit(std::uint64_t index, std::size_t k) { return static_cast<int>((index >> k) & 1U); }

// Diagonal energies relative to |0...0>, which only shifts a global phase.
std::vector<double> relative_energies(const ChainParams& params) {
  const std::size_t n = params.n();
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> e(dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    double zeeman = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      if (bit(i, k)) zeeman += params.larmor(k);
    int ising = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const int a = 1 - 2 * bit(i, k);
      const int b = 1 - 2 * bit(i, k + 1);
      ising += a * b;
    }
    e[i] = zeeman - 0.5 * params.j() * (ising - static_cast<int>(n - 1));
  }
  return e;
}

}  // namespace

DenseVector dense_reference(const ChainParams& params, std::span<const Pulse> pulses,
                            const DenseVector& initial, std::size_t cap) {
  const std::size_t dim = check_dense(params, initial, cap);
  const std::size_t n = params.n();
  const auto energies = relative_energies(params);
  std::vector<int> excitations(dim);
  for (std::uint64_t i = 0; i < dim; ++i) excitations[i] = std::popcount(i);

  Eigen::VectorXcd amp(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) amp[static_cast<Eigen::Index>(i)] = initial[i];

  double t = 0.0;
  for (const auto& pulse : pulses) {
    pulse.validate();
    // Frame rotating with the carrier: H = diag(E_p - omega M_p) - (rabi/2) sum_k X_k,
    // time independent for a rectangular pulse.
    Eigen::VectorXd diag(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i)
      diag[static_cast<Eigen::Index>(i)] = energies[i] - pulse.omega * excitations[i];
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      h(ii, ii) = diag[ii];
      for (std::size_t k = 0; k < n; ++k) {
        const auto jj = static_cast<Eigen::Index>(i ^ (std::size_t{1} << k));
        h(ii, jj) = -0.5 * pulse.rabi;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) throw InternalError("dense_reference: eigensolver failed");
    const Eigen::MatrixXd& vecs = solver.eigenvectors();
    const Eigen::VectorXd& vals = solver.eigenvalues();

    // Interaction picture -> rotating frame at t, evolve, and back at t + tau.
    Eigen::VectorXcd rot(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < rot.size(); ++i) rot[i] = amp[i] * std::polar(1.0, -diag[i] * t);
    Eigen::VectorXcd coeff = vecs.transpose() * rot;
    for (Eigen::Index i = 0; i < coeff.size(); ++i)
      coeff[i] *= std::polar(1.0, -vals[i] * pulse.tau);
    rot = vecs * coeff;
    t += pulse.tau;
    for (Eigen::Index i = 0; i < rot.size(); ++i) amp[i] = rot[i] * std::polar(1.0, diag[i] * t);
  }

  DenseVector out(dim);
  for (std::size_t i = 0; i < dim; ++i) out[i] = amp[static_cast<Eigen::Index>(i)];
  return out;
}

DenseVector dense_restricted_reference(const ChainParams& params, std::span<const Pulse> pulses,
                                       const DenseVector& initial, std::size_t cap) {
  const std::size_t dim = check_dense(params, initial, cap);
  const std::size_t n = params.n();
  DenseVector amp = initial;
  double t = 0.0;
  for (const auto& pulse : pulses) {
    pulse.validate();
    const std::size_t k = target_spin(pulse, params);
    const std::uint64_t mask = std::uint64_t{1} << k;
    for (std::uint64_t lower = 0; lower < dim; ++lower) {
      if (lower & mask) continue;
      int neighbors = 0;
      if (k > 0) neighbors += 1 - 2 * bit(lower, k - 1);
      if (k + 1 < n) neighbors += 1 - 2 * bit(lower, k + 1);
      const double delta = (params.larmor(k) - pulse.omega) + params.j() * neighbors;
      const auto prop = PairPropagator::make(delta, pulse.rabi, pulse.tau);
      const auto [m, p] = prop.step(amp[lower], amp[lower | mask], t);
      amp[lower] = m;
      amp[lower | mask] = p;
    }
    t += pulse.tau;
  }
  return amp;
}

}  // namespace isingcn
