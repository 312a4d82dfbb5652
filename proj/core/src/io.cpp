#include "isingcn/io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "isingcn/errors.hpp"

namespace isingcn {

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

std::string trace_csv(std::span<const TraceRow> rows) {
  std::string out = "pulse_index,omega,rabi,tau,tracked_states,norm,pruned_mass_cumulative\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{}\n", r.pulse_index, format_double(r.omega),
                       format_double(r.rabi), format_double(r.tau), r.tracked_states,
                       format_double(r.norm), format_double(r.pruned_mass_cumulative));
  }
  return out;
}

std::string unwanted_csv(const RunReport& report) {
  std::string out = "generation_index,basis_hex,ones_positions,excitation_count,probability\n";
  const double scale = report.scale();
  for (const auto& u : report.unwanted) {
    out += fmt::format("{},{},{},{},{}\n", u.generation_index, u.state.to_hex(),
                       fmt::join(u.state.ones(), " "), u.excitation_count,
                       format_double(u.probability * scale));
  }
  return out;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "knob_name,knob_value,c0_sq,target_sq,unwanted_count,pruned_mass,seed\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{}\n", r.knob_name, format_double(r.knob_value),
                       format_double(r.c0_sq), format_double(r.target_sq), r.unwanted_count,
                       format_double(r.pruned_mass), r.seed);
  }
  return out;
}

namespace {

nlohmann::json amplitude_item(const BasisState& s, Amplitude a) {
  return {{"state", s.to_hex()}, {"re", a.real()}, {"im", a.imag()}};
}

}  // namespace

std::string amplitudes_json(const SparseState& state) {
  std::vector<const SparseState::Entry*> sorted;
  for (const auto& e : state.entries()) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->state < b->state; });
  nlohmann::json items = nlohmann::json::array();
  for (const auto* e : sorted) items.push_back(amplitude_item(e->state, e->amp));
  nlohmann::json doc{{"n", state.n_qubits()}, {"time", state.time()}, {"amplitudes", items}};
  return doc.dump(2) + "\n";
}

std::string amplitudes_json(std::size_t n, const DenseVector& dense, double time) {
  nlohmann::json items = nlohmann::json::array();
  for (std::uint64_t i = 0; i < dense.size(); ++i) {
    if (dense[i] == Amplitude{}) continue;
    items.push_back(amplitude_item(basis_from_index(n, i), dense[i]));
  }
  nlohmann::json doc{{"n", n}, {"time", time}, {"amplitudes", items}};
  return doc.dump(2) + "\n";
}

std::string report_json(const RunReport& report, const BandSummary& bands,
                        const ExcitationProfile& profile) {
  const double scale = report.scale();
  nlohmann::json band_items = nlohmann::json::array();
  for (std::size_t b = 0; b < bands.bands.size(); ++b) {
    const auto& band = bands.bands[b];
    nlohmann::json hist = nlohmann::json::object();
    if (b < profile.size())
      for (const auto& [count, states] : profile[b]) hist[std::to_string(count)] = states;
    band_items.push_back({{"count", band.count},
                          {"min_p", band.min_p * scale},
                          {"median_p", band.median_p * scale},
                          {"max_p", band.max_p * scale},
                          {"excitation_histogram", hist}});
  }
  nlohmann::json states = nlohmann::json::array();
  for (const auto& u : report.unwanted) {
    states.push_back({{"generation_index", u.generation_index},
                      {"basis_hex", u.state.to_hex()},
                      {"ones_positions", u.state.ones()},
                      {"excitation_count", u.excitation_count},
                      {"probability", u.probability * scale}});
  }
  nlohmann::json doc{{"n", report.n},
                     {"convention", to_string(report.convention)},
                     {"p_ground", report.p_ground * scale},
                     {"p_target", report.p_target * scale},
                     {"unwanted_count", report.unwanted.size()},
                     {"unwanted_mass", report.unwanted_mass() * scale},
                     {"below_report_mass", report.below_report_mass * scale},
                     {"pruned_mass", report.pruned_mass * scale},
                     {"accounting_defect", report.accounting_defect()},
                     {"band_gap_decades", bands.gap_decades},
                     {"bands", band_items},
                     {"unwanted", states}};
  return doc.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput(fmt::format("cannot open '{}' for writing", path));
  out << contents;
  if (!out) throw InvalidInput(fmt::format("failed writing '{}'", path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput(fmt::format("cannot open '{}'", path));
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace isingcn
