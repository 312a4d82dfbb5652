#include "isingcn/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>
#include <json.hpp>

#include "isingcn/basis_state.hpp"
#include "isingcn/engine.hpp"
#include "isingcn/errors.hpp"

namespace isingcn {

std::string_view to_string(PulseRole role) {
  switch (role) {
    case PulseRole::superpose: return "superpose";
    case PulseRole::flip: return "flip";
    case PulseRole::unflip: return "unflip";
  }
  return "flip";
}

PulseRole pulse_role_from_string(std::string_view name) {
  if (name == "superpose") return PulseRole::superpose;
  if (name == "flip") return PulseRole::flip;
  if (name == "unflip") return PulseRole::unflip;
  throw InvalidInput(fmt::format("unknown pulse role '{}'", name));
}

std::string_view to_string(DistortionMode mode) {
  return mode == DistortionMode::fixed_offset ? "fixed_offset" : "uniform_random";
}

DistortionMode distortion_mode_from_string(std::string_view name) {
  if (name == "fixed_offset") return DistortionMode::fixed_offset;
  if (name == "uniform_random") return DistortionMode::uniform_random;
  throw InvalidInput(fmt::format("unknown distortion mode '{}'", name));
}

double omega_for_2pik(double delta, int k) {
  if (k < 1) throw InvalidInput("omega_for_2pik: k must be a positive integer");
  if (delta == 0.0) throw InvalidInput("omega_for_2pik: detuning must be nonzero");
  return std::abs(delta) / std::sqrt(4.0 * k * k - 1.0);
}

namespace {

struct Step {
  std::size_t spin;
  double omega;
  PulseRole role;
};

double branch_detuning(const BasisState& branch, std::size_t k, const Pulse& pulse,
                       const ChainParams& params) {
  const BasisState lower = branch.test(k) ? flip(branch, k) : branch;
  return pair_detuning(lower, k, pulse, params).delta;
}

bool near(double value, double expected, double scale) {
  return std::abs(value - expected) <= 1e-9 * std::max(1.0, std::abs(scale));
}

}  // namespace

PulseSequence compile_cn_remote(const ChainParams& params, double rabi) {
  const std::size_t n = params.n();
  if (n < 3) throw InvalidInput(fmt::format("compile_cn_remote: need N >= 3, got {}", n));
  if (!(rabi > 0.0)) throw InvalidInput("compile_cn_remote: Rabi frequency must be positive");
  const double j = params.j();

  std::vector<Step> steps;
  steps.reserve(2 * n - 3);
  steps.push_back({n - 2, params.larmor(n - 2), PulseRole::flip});
  for (std::size_t s = n - 2; s-- > 0;) {
    const double flip_at = s == 0 ? params.larmor(0) - j : params.larmor(s);
    steps.push_back({s, flip_at, PulseRole::flip});
    const std::size_t back = s + 1;
    const double unflip_at = back == n - 2 ? params.larmor(back) - 2 * j : params.larmor(back);
    steps.push_back({back, unflip_at, PulseRole::unflip});
  }

  PulseSequence seq;
  const BasisState ground(n);
  BasisState excited = BasisState::from_ones(n, {n - 1});

  const Pulse half = Pulse::make(params.larmor(n - 1) + j, rabi, PulseKind::half_pi);
  seq.pulses.push_back(half);
  const double half_delta = branch_detuning(ground, n - 1, half, params);
  seq.annotations.push_back({n - 1, PulseRole::superpose, half_delta, half_delta});

  for (const auto& step : steps) {
    const Pulse pulse = Pulse::make(step.omega, rabi, PulseKind::pi);
    if (target_spin(pulse, params) != step.spin) {
      throw InternalError(fmt::format("compile_cn_remote: pulse at {} does not address spin {}",
                                      step.omega, step.spin));
    }
    const double on_excited = branch_detuning(excited, step.spin, pulse, params);
    const double on_ground = branch_detuning(ground, step.spin, pulse, params);
    if (!near(on_excited, 0.0, step.omega) ||
        !(near(on_ground, 2 * j, step.omega) || near(on_ground, 4 * j, step.omega))) {
      throw InternalError(fmt::format(
          "compile_cn_remote: spin {} pulse has excited detuning {} and ground detuning {}",
          step.spin, on_excited, on_ground));
    }
    excited.flip_in_place(step.spin);
    seq.pulses.push_back(pulse);
    seq.annotations.push_back({step.spin, step.role, on_excited, on_ground});
  }

  if (excited != BasisState::from_ones(n, {n - 1, 0}))
    throw InternalError("compile_cn_remote: excited branch does not end in |10...01>");
  return seq;
}

PulseSequence distort(const PulseSequence& seq, const DistortionSpec& spec) {
  const std::size_t count = seq.pi_count();
  if (spec.first < 1 || spec.first > spec.last || spec.last > count) {
    throw InvalidInput(fmt::format("distort: range [{}, {}] outside pi pulses [1, {}]",
                                   spec.first, spec.last, count));
  }
  if (!(spec.epsilon0 >= 0.0)) throw InvalidInput("distort: epsilon0 must be non-negative");

  PulseSequence out = seq;
  std::mt19937_64 rng(spec.seed);
  for (std::size_t ordinal = spec.first; ordinal <= spec.last; ++ordinal) {
    double eps = spec.epsilon0;
    if (spec.mode == DistortionMode::uniform_random) {
      // 53-bit uniform on [0, 1), independent of the standard library's distributions
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      eps = spec.epsilon0 * (2.0 * u - 1.0);
    }
    Pulse& p = out.pulses[ordinal];
    const double rabi = p.rabi + eps;
    if (!(rabi > 0.0)) {
      throw InvalidInput(
          fmt::format("distort: pi pulse {} would get non-positive Rabi frequency {}", ordinal,
                      rabi));
    }
    if (spec.freeze_tau) {
      if (rabi != p.rabi) p.kind = PulseKind::custom;
      p.rabi = rabi;
    } else {
      p.rabi = rabi;
      p.tau = std::numbers::pi / rabi;
    }
  }
  return out;
}

std::string sequence_to_json(const PulseSequence& seq) {
  if (seq.annotations.size() != seq.pulses.size())
    throw InvalidInput("sequence_to_json: annotation count differs from pulse count");
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < seq.pulses.size(); ++i) {
    const auto& p = seq.pulses[i];
    const auto& a = seq.annotations[i];
    arr.push_back({{"ordinal", i},
                   {"kind", to_string(p.kind)},
                   {"omega", p.omega},
                   {"rabi", p.rabi},
                   {"tau", p.tau},
                   {"target_spin", a.target_spin},
                   {"role", to_string(a.role)},
                   {"branch_detunings",
                    {{"excited", a.excited_detuning}, {"ground", a.ground_detuning}}}});
  }
  return arr.dump(2) + "\n";
}

PulseSequence sequence_from_json(std::string_view text) {
  PulseSequence seq;
  try {
    const auto arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw InvalidInput("sequence JSON: top level must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& item = arr[i];
      if (item.at("ordinal").get<std::size_t>() != i)
        throw InvalidInput(fmt::format("sequence JSON: entry {} has the wrong ordinal", i));
      Pulse p{item.at("omega").get<double>(), item.at("rabi").get<double>(),
              item.at("tau").get<double>(),
              pulse_kind_from_string(item.at("kind").get<std::string>())};
      p.validate();
      const auto& d = item.at("branch_detunings");
      seq.pulses.push_back(p);
      seq.annotations.push_back({item.at("target_spin").get<std::size_t>(),
                                 pulse_role_from_string(item.value("role", std::string("flip"))),
                                 d.at("excited").get<double>(), d.at("ground").get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(fmt::format("sequence JSON: {}", e.what()));
  }
  return seq;
}

}  // namespace isingcn
