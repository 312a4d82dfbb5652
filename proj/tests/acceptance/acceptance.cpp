// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. An optional argument selects a single criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "commands.hpp"
#include "isingcn/analysis.hpp"
#include "isingcn/io.hpp"
#include "isingcn/oracles.hpp"
#include "isingcn/sequence.hpp"

namespace {

using namespace isingcn;
using std::numbers::pi;

struct Outcome {
  bool passed;
  std::string detail;
};

using Criterion = std::function<Outcome()>;

const double kOperatingRabi = omega_for_2pik(2.0, 10);  // 2/sqrt(399)

// Ground-branch amplitude after a train of identical detuned pi pulses on
// the middle spin of a three-spin chain.
Amplitude ground_after_train(double delta, double rabi, std::size_t count) {
  const auto params = ChainParams::uniform(3);
  const auto train = detuned_pi_train(params, 1, delta, rabi, count);
  const auto run = run_sequence(SparseState(BasisState(3)), train, params, 0.0);
  return run.final_state.amplitude(BasisState(3));
}

Outcome pulse_counts() {
  const auto l200 = compile_cn_remote(ChainParams::uniform(200), 0.1).pi_count();
  const auto l1000 = compile_cn_remote(ChainParams::uniform(1000), 0.1).pi_count();
  return {l200 == 397 && l1000 == 1997, fmt::format("L(200)={} L(1000)={}", l200, l1000)};
}

Outcome rabi_resonance() {
  double worst = 0.0;
  for (double rabi : {0.05, 0.1, 0.14, 1.0}) {
    const auto params = ChainParams::uniform(200);
    SparseState s{BasisState(200)};
    propagate(s, Pulse::make(params.larmor(0) + params.j(), rabi, PulseKind::pi), params, 0.0);
    const double up = std::norm(s.amplitude(BasisState::from_ones(200, {0})));
    worst = std::max(worst, std::abs(1.0 - up));
  }
  return {worst <= 1e-12, fmt::format("max |1 - P_upper| = {:.3e} (tolerance 1e-12)", worst)};
}

Outcome null_leakage() {
  double worst_leak = 0.0, worst_stay = 0.0;
  for (int k : {1, 5, 10}) {
    const double rabi = omega_for_2pik(2.0, k);
    const auto params = ChainParams::uniform(3);
    SparseState s{BasisState(3)};
    propagate(s, detuned_pi_train(params, 1, 2.0, rabi, 1).front(), params, 0.0);
    worst_leak = std::max(worst_leak, std::norm(s.amplitude(BasisState::from_ones(3, {1}))));
    worst_stay = std::max(worst_stay, std::abs(1.0 - std::norm(s.amplitude(BasisState(3)))));
  }
  return {worst_leak <= 1e-12 && worst_stay <= 1e-12,
          fmt::format("max leaked probability {:.3e}, max |1 - P_ground| {:.3e} (tolerance 1e-12)",
                      worst_leak, worst_stay)};
}

Outcome k1_phase() {
  const double degrees = std::arg(ground_after_train(2.0, 2.0 / std::sqrt(3.0), 1)) * 180.0 / pi;
  return {std::abs(degrees - 24.1) <= 0.5,
          fmt::format("phase {:.4f} deg (expected 24.1 +- 0.5)", degrees)};
}

Outcome analytic_product_phase() {
  double worst_mod = 0.0, worst_phase = 0.0;
  for (int k : {1, 3, 10}) {
    for (std::size_t l : {1u, 2u, 397u, 1997u, 2000u}) {
      const Amplitude sim = ground_after_train(2.0, omega_for_2pik(2.0, k), l);
      const Amplitude expect = analytic_final_state(k, l).c0;
      worst_mod = std::max(worst_mod, std::abs(std::abs(sim) - std::abs(expect)));
      worst_phase = std::max(worst_phase, std::abs(std::arg(sim / expect)));
    }
  }
  return {worst_mod <= 1e-9 && worst_phase <= 1e-6,
          fmt::format("max modulus error {:.3e} (1e-9), max phase error {:.3e} rad (1e-6)",
                      worst_mod, worst_phase)};
}

DenseVector to_dense(const SparseState& s) {
  DenseVector out(std::size_t{1} << s.n_qubits());
  for (const auto& e : s.entries()) out[dense_index(e.state)] = e.amp;
  return out;
}

double total_variation(const DenseVector& a, const DenseVector& b) {
  double tv = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) tv += std::abs(std::norm(a[i]) - std::norm(b[i]));
  return 0.5 * tv;
}

Outcome dense_equivalence() {
  const std::size_t n = 6;
  const auto params = ChainParams::uniform(n, 100.0);
  const auto seq = compile_cn_remote(params, kOperatingRabi);
  const auto initial = dense_basis_vector(n, BasisState(n));
  const auto sparse = to_dense(run_sequence(SparseState(BasisState(n)), seq.pulses, params, 0.0)
                                   .final_state);
  const double tv_full = total_variation(dense_reference(params, seq.pulses, initial), sparse);
  const double tv_restricted =
      total_variation(dense_restricted_reference(params, seq.pulses, initial), sparse);
  return {tv_full <= 1e-3 && tv_restricted <= 1e-10,
          fmt::format("TV(dense, sparse) = {:.3e} (1e-3), TV(restricted, sparse) = {:.3e} (1e-10)",
                      tv_full, tv_restricted)};
}

Outcome perturbative_regime() {
  struct Case {
    DistortionMode mode;
    double eps0;
    std::size_t dk;
  };
  double worst = 0.0;
  std::size_t used = 0;
  const std::vector<Case> cases{{DistortionMode::fixed_offset, 0.0005, 100},
                                {DistortionMode::fixed_offset, 0.001, 40},
                                {DistortionMode::fixed_offset, 0.002, 5},
                                {DistortionMode::uniform_random, 0.001, 100},
                                {DistortionMode::uniform_random, 0.004, 5}};
  for (const auto& c : cases) {
    ExperimentConfig cfg;
    cfg.n = 200;
    cfg.rabi = kOperatingRabi;
    cfg.convention = Convention::paper_doubled;
    cfg.distortion = DistortionSpec{c.mode, 10, 10 + c.dk, c.eps0, 1, false};
    const auto r = run_experiment(cfg);
    double sum_eps = 0.0;
    for (std::size_t i = 1; i < r.sequence.pulses.size(); ++i) {
      const auto& p = r.sequence.pulses[i];
      sum_eps += epsilon(p.rabi, r.sequence.annotations[i].ground_detuning, p.tau);
    }
    if (!(sum_eps < 0.01)) continue;
    ++used;
    const double measured = 1.0 - r.report.p_ground * r.report.scale();
    worst = std::max(worst, std::abs(measured - sum_eps) / sum_eps);
  }
  return {used == cases.size() && worst <= 0.10,
          fmt::format("{} of {} configurations with sum(eps) < 0.01, max relative error {:.4f} "
                      "(0.10)",
                      used, cases.size(), worst)};
}

std::vector<double> unwanted_probabilities(const RunReport& report) {
  std::vector<double> p;
  for (const auto& u : report.unwanted) p.push_back(u.probability * report.scale());
  return p;
}

Outcome band_census() {
  ExperimentConfig cfg;
  cfg.n = 200;
  cfg.rabi = 0.14;
  cfg.convention = Convention::paper_doubled;
  cfg.prune_threshold = 5e-7;   // 1e-6 in the doubled convention
  cfg.report_threshold = 5e-7;
  const auto r = run_experiment(cfg);
  const std::size_t count = r.report.unwanted.size();
  const bool count_ok = count >= 7385.0 / 2 && count <= 7385.0 * 2;
  const auto p = unwanted_probabilities(r.report);
  const auto bands = p.empty() ? BandSummary{} : detect_bands(p);
  bool bands_ok = bands.bands.size() == 2;
  double ratio = 0.0;
  if (bands_ok) {
    ratio = bands.bands[1].median_p / bands.bands[0].median_p;
    bands_ok = std::abs(std::log10(ratio) + 3.0) <= 1.0;
  }
  return {count_ok && bands_ok,
          fmt::format("unwanted={} (window [3692.5, 14770]), bands={} (2), median ratio={:.3e} "
                      "(within one decade of 1e-3)",
                      count, bands.bands.size(), ratio)};
}

Outcome two_pi_k_extrema() {
  const std::vector<double> factors{0.99, 0.995, 1.0, 1.005, 1.01};
  std::string failures;
  std::string summary;
  for (int k = 7; k <= 12; ++k) {
    std::vector<double> c0;
    std::vector<std::size_t> unwanted;
    for (double f : factors) {
      ExperimentConfig cfg;
      cfg.n = 200;
      cfg.rabi = omega_for_2pik(2.0, k) * f;
      const auto r = run_experiment(cfg);
      c0.push_back(r.report.p_ground * r.report.scale());
      unwanted.push_back(r.report.unwanted.size());
    }
    const bool peak = c0[2] > c0[1] && c0[2] > c0[3];
    const bool dip = unwanted[2] <= unwanted[1] && unwanted[2] <= unwanted[3] &&
                     unwanted[2] < std::max(unwanted[0], unwanted[4]);
    summary += fmt::format(" k={}:|C0|^2={:.6f},unwanted={}", k, c0[2], unwanted[2]);
    if (!peak || !dip) failures += fmt::format(" k={}", k);
  }
  return {failures.empty(),
          failures.empty() ? "local max of |C0|^2 and min of unwanted at every 2pi k point;" + summary
                           : "no extremum at" + failures};
}

Outcome scale_accounting() {
  ExperimentConfig cfg;
  cfg.n = 1000;
  cfg.rabi = kOperatingRabi;
  cfg.convention = Convention::normalized;
  const auto start = std::chrono::steady_clock::now();
  const auto r = run_experiment(cfg);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double branches = r.report.p_ground + r.report.p_target;
  const double defect = r.report.accounting_defect();
  return {seconds <= 600.0 && branches >= 0.99 && defect <= 1e-6,
          fmt::format("wall {:.2f}s (600), p_ground+p_target={:.8f} (0.99), accounting defect "
                      "{:.3e} (1e-6)",
                      seconds, branches, defect)};
}

Outcome gauge_invariance() {
  double worst = 0.0;
  bool same_sets = true;
  for (double rabi : {0.14, kOperatingRabi}) {
    const std::size_t n = 60;
    const auto base = ChainParams::uniform(n);
    const auto moved = base.shifted(1e5);
    const auto a = compile_cn_remote(base, rabi);
    const auto b = compile_cn_remote(moved, rabi);
    const auto ra = classify_final(
        run_sequence(SparseState(BasisState(n)), a.pulses, base).final_state, 5e-7);
    const auto rb = classify_final(
        run_sequence(SparseState(BasisState(n)), b.pulses, moved).final_state, 5e-7);
    worst = std::max({worst, std::abs(ra.p_ground - rb.p_ground),
                      std::abs(ra.p_target - rb.p_target), std::abs(ra.pruned_mass - rb.pruned_mass)});
    if (ra.unwanted.size() != rb.unwanted.size()) {
      same_sets = false;
      continue;
    }
    for (std::size_t i = 0; i < ra.unwanted.size(); ++i) {
      if (ra.unwanted[i].state != rb.unwanted[i].state) same_sets = false;
      worst = std::max(worst, std::abs(ra.unwanted[i].probability - rb.unwanted[i].probability));
    }
  }
  return {same_sets && worst <= 1e-12,
          fmt::format("identical unwanted sets: {}, max probability change {:.3e} (1e-12)",
                      same_sets ? "yes" : "no", worst)};
}

Outcome determinism() {
  const auto root = std::filesystem::temp_directory_path() / "isingcn_acceptance_determinism";
  cli::RunConfig cfg;
  cfg.n = 200;
  cfg.rabi = 0.1;
  cfg.distort_mode = "uniform_random";
  cfg.distort_range = "10:60";
  cfg.epsilon0 = 0.005;
  cfg.seed = 2024;
  cfg.experiment = "random_magnitude";
  cfg.grid = "0.001,0.003,0.005";
  std::vector<std::string> outputs;
  std::ostringstream sink;
  for (const char* run : {"a", "b"}) {
    cfg.out = (root / run).string();
    std::filesystem::remove_all(cfg.out);
    if (cli::cmd_run(cfg, sink, sink) != 0 || cli::cmd_sweep(cfg, sink, sink) != 0)
      return {false, "run or sweep failed: " + sink.str()};
    std::string all;
    for (const char* f : {"sequence.json", "report.json", "unwanted.csv", "trace.csv", "sweep.csv"})
      all += read_text_file((std::filesystem::path(cfg.out) / f).string());
    outputs.push_back(std::move(all));
  }
  return {outputs[0] == outputs[1],
          fmt::format("{} bytes of CSV/JSON compared, {}", outputs[0].size(),
                      outputs[0] == outputs[1] ? "identical" : "different")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"pulse_counts", pulse_counts},
      {"rabi_resonance", rabi_resonance},
      {"null_leakage", null_leakage},
      {"k1_phase", k1_phase},
      {"analytic_product_phase", analytic_product_phase},
      {"dense_equivalence", dense_equivalence},
      {"perturbative_regime", perturbative_regime},
      {"band_census", band_census},
      {"two_pi_k_extrema", two_pi_k_extrema},
      {"scale_accounting", scale_accounting},
      {"gauge_invariance", gauge_invariance},
      {"determinism", determinism},
  };
  const std::string only = argc > 1 ? argv[1] : "";
  bool all_passed = true;
  bool matched = false;
  for (const auto& [name, run] : criteria) {
    if (!only.empty() && name != only) continue;
    matched = true;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, fmt::format("exception: {}", e.what())};
    }
    all_passed = all_passed && o.passed;
    fmt::print("{} {}: {}\n", o.passed ? "PASS" : "FAIL", name, o.detail);
    std::fflush(stdout);
  }
  if (!matched) {
    fmt::print(stderr, "unknown criterion '{}'\n", only);
    return 2;
  }
  return all_passed ? 0 : 1;
}
