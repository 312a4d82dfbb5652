#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "isingcn/analysis.hpp"
#include "isingcn/engine.hpp"
#include "isingcn/oracles.hpp"

namespace isingcn {

/// Floating-point text with 17 significant digits.
std::string format_double(double x);

/// pulse_index,omega,rabi,tau,tracked_states,norm,pruned_mass_cumulative
std::string trace_csv(std::span<const TraceRow> rows);

/// generation_index,basis_hex,ones_positions,excitation_count,probability
/// Probabilities in the report's convention; ones_positions is a
/// space-separated descending list.
std::string unwanted_csv(const RunReport& report);

/// knob_name,knob_value,c0_sq,target_sq,unwanted_count,pruned_mass,seed
std::string sweep_csv(std::span<const SweepRow> rows);

/// {"n": N, "time": t, "amplitudes": [{"state": hex, "re": x, "im": y}, ...]}
/// States are listed in canonical (hex) order.
std::string amplitudes_json(const SparseState& state);
std::string amplitudes_json(std::size_t n, const DenseVector& dense, double time);

/// Summary, band structure, excitation profile and unwanted-state list.
std::string report_json(const RunReport& report, const BandSummary& bands,
                        const ExcitationProfile& profile);

void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace isingcn
