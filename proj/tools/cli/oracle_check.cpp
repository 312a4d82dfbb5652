#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "commands.hpp"
#include "isingcn/engine.hpp"
#include "isingcn/errors.hpp"
#include "isingcn/oracles.hpp"
#include "isingcn/sequence.hpp"

namespace isingcn::cli {

namespace {

CheckResult check(std::string name, double measured, double tolerance) {
  return {std::move(name), measured, tolerance, measured <= tolerance};
}

DenseVector to_dense(const SparseState& s) {
  DenseVector v(std::size_t{1} << s.n_qubits());
  for (const auto& e : s.entries()) v[dense_index(e.state)] = e.amp;
  return v;
}

double total_variation(const DenseVector& a, const DenseVector& b) {
  double tv = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) tv += std::abs(std::norm(a[i]) - std::norm(b[i]));
  return 0.5 * tv;
}

double max_amplitude_gap(const DenseVector& a, const DenseVector& b) {
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

}  // namespace

std::vector<CheckResult> run_oracle_checks(const RunConfig& config) {
  std::vector<CheckResult> out;
  constexpr double pi = std::numbers::pi;

  {
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> det(-10.0, 10.0), rabi(0.01, 2.0), tau(0.1, 100.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      auto p = PairPropagator::make(det(rng), rabi(rng), tau(rng));
      if (config.inject_fault) p.a_mm *= 1.0 + 1e-6;
      worst = std::max(worst, p.unitarity_defect());
    }
    out.push_back(check("propagator_unitarity", worst, 1e-12));
  }
  {
    const double rabi = 0.1;
    const auto p = PairPropagator::make(0.0, rabi, pi / rabi);
    const auto [m, u] = p.step(1.0, 0.0, 0.0);
    out.push_back(check("rabi_resonant_transfer", std::abs(1.0 - std::norm(u)) + std::norm(m),
                        1e-12));
  }
  {
    double leak = 0.0;
    for (int k : {1, 5, 10}) {
      const double rabi = omega_for_2pik(2.0, k);
      leak = std::max(leak, std::abs(PairPropagator::make(2.0, rabi, pi / rabi).a_pm));
    }
    out.push_back(check("two_pi_k_null_leakage", leak, 1e-12));
  }
  {
    const double rabi = 2.0 / std::sqrt(3.0);
    const auto [m, u] = PairPropagator::make(2.0, rabi, pi / rabi).step(1.0, 0.0, 0.0);
    const double degrees = std::arg(m) * 180.0 / pi;
    out.push_back(check("k1_ground_phase_minus_24.1_deg", std::abs(degrees - 24.1), 0.5));
  }
  {
    const int k = 10;
    const std::size_t count = 2000;
    const auto params = ChainParams::uniform(3, config.delta_omega, config.omega0);
    const auto train = detuned_pi_train(params, 1, 2.0, omega_for_2pik(2.0, k), count);
    const auto run = run_sequence(SparseState(BasisState(3)), train, params, config.threshold);
    const Amplitude sim = run.final_state.amplitude(BasisState(3));
    const Amplitude expect = analytic_final_state(k, count).c0;
    out.push_back(check("analytic_c0_modulus", std::abs(std::abs(sim) - std::abs(expect)), 1e-9));
    out.push_back(check("analytic_c0_phase_rad", std::abs(std::arg(sim / expect)), 1e-6));
  }

  const std::size_t n = config.dense_n;
  if (n < 3 || n > kDenseQubitCap)
    throw InvalidInput("oracle-check: dense chain length must lie in [3, 12]");
  const auto params = ChainParams::uniform(n, config.delta_omega, config.omega0);
  const auto seq = compile_cn_remote(params, config.rabi);
  const BasisState ground(n);
  const auto initial = dense_basis_vector(n, ground);

  const auto exact = run_sequence(SparseState(ground), seq.pulses, params, 0.0);
  const auto restricted = dense_restricted_reference(params, seq.pulses, initial);
  const auto full = dense_reference(params, seq.pulses, initial);
  const auto sparse_dense = to_dense(exact.final_state);

  double full_norm = 0.0;
  for (const auto& a : full) full_norm += std::norm(a);
  double bookkeeping = 0.0;
  for (const auto& row : exact.trace)
    bookkeeping = std::max(bookkeeping, std::abs(row.norm + row.pruned_mass_cumulative - 1.0));

  out.push_back(check("sparse_norm_bookkeeping", bookkeeping, 1e-9));
  out.push_back(check("restricted_vs_sparse_max_amp", max_amplitude_gap(restricted, sparse_dense),
                      1e-10));
  out.push_back(check("dense_vs_sparse_total_variation", total_variation(full, sparse_dense), 1e-3));
  out.push_back(check("dense_norm_conservation", std::abs(full_norm - 1.0), 1e-9));

  const auto pruned = run_sequence(SparseState(ground), seq.pulses, params, config.threshold);
  const double pruned_mass = pruned.final_state.pruned_mass();
  out.push_back(check("pruning_total_variation",
                      total_variation(to_dense(pruned.final_state), restricted),
                      pruned_mass + 1e-9));
  return out;
}

}  // namespace isingcn::cli
