#include "isingcn/io.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "isingcn/errors.hpp"
#include "isingcn/sequence.hpp"

namespace isingcn {
namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::size_t field_count(const std::string& line) {
  return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
}

TEST(FormatDouble, SeventeenSignificantDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(1e-6), "9.9999999999999995e-07");
  for (double x : {0.1, 2.0 / 3.0, 1e-300, 123456.789, -3.5e-7})
    EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST(TraceCsv, HeaderAndRows) {
  const std::vector<TraceRow> rows{{0, 1000.5, 0.1, 31.4, 2, 1.0, 0.0},
                                   {1, 1100.0, 0.1, 31.4, 3, 0.999, 0.001}};
  const auto l = lines(trace_csv(rows));
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0], "pulse_index,omega,rabi,tau,tracked_states,norm,pruned_mass_cumulative");
  EXPECT_EQ(l[1].substr(0, 7), "0,1000.");
  for (const auto& line : l) EXPECT_EQ(field_count(line), 7u);
}

TEST(UnwantedCsv, UsesReportConvention) {
  RunReport r;
  r.n = 8;
  r.unwanted = {{BasisState::from_ones(8, {6, 2}), 0.25, 4, 2}};
  r.convention = Convention::paper_doubled;
  auto l = lines(unwanted_csv(r));
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0], "generation_index,basis_hex,ones_positions,excitation_count,probability");
  EXPECT_EQ(l[1], "4,44,6 2,2,0.5");
  r.convention = Convention::normalized;
  EXPECT_EQ(lines(unwanted_csv(r))[1], "4,44,6 2,2,0.25");
}

TEST(SweepCsv, ErrorRowsKeepSchema) {
  const double nan = std::nan("");
  const std::vector<SweepRow> rows{{"rabi", 0.1, 0.99, 0.98, 3, 1e-6, 7, std::nullopt},
                                   {"delta_k", 2.5, nan, nan, 0, nan, 8, "bad"}};
  const auto l = lines(sweep_csv(rows));
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0], "knob_name,knob_value,c0_sq,target_sq,unwanted_count,pruned_mass,seed");
  EXPECT_EQ(l[2], "delta_k,2.5,nan,nan,0,nan,8");
  for (const auto& line : l) EXPECT_EQ(field_count(line), 7u);
}

TEST(AmplitudesJson, CanonicalOrderAndDenseAgreement) {
  const std::size_t n = 5;
  const auto state = SparseState::from_amplitudes(
      {{BasisState::from_ones(n, {4}), {0.0, std::sqrt(0.5)}}, {BasisState(n), std::sqrt(0.5)}});
  const auto sparse = amplitudes_json(state);
  EXPECT_LT(sparse.find("\"00\""), sparse.find("\"10\""));
  DenseVector dense(32);
  dense[0] = std::sqrt(0.5);
  dense[16] = {0.0, std::sqrt(0.5)};
  EXPECT_EQ(amplitudes_json(n, dense, 0.0), sparse);
}

TEST(ReportJson, CarriesSummaryBandsAndStates) {
  ExperimentConfig cfg;
  cfg.n = 20;
  cfg.rabi = 0.14;
  const auto result = run_experiment(cfg);
  std::vector<double> p;
  for (const auto& u : result.report.unwanted) p.push_back(u.probability);
  ASSERT_FALSE(p.empty());
  const auto bands = detect_bands(p);
  const auto text = report_json(result.report, bands, excitation_profile(result.report, bands));
  for (const char* key : {"\"p_ground\"", "\"p_target\"", "\"unwanted_count\"", "\"bands\"",
                          "\"excitation_histogram\"", "\"pruned_mass\"", "\"accounting_defect\"",
                          "\"convention\": \"paper_doubled\""})
    EXPECT_NE(text.find(key), std::string::npos) << key;
}

TEST(TextFiles, WriteThenRead) {
  const auto dir = std::filesystem::temp_directory_path() / "isingcn_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "x.txt").string();
  write_text_file(path, "a,b\n1,2\n");
  EXPECT_EQ(read_text_file(path), "a,b\n1,2\n");
  EXPECT_THROW(read_text_file((dir / "missing.txt").string()), InvalidInput);
  EXPECT_THROW(write_text_file((dir / "no/such/dir.txt").string(), "x"), InvalidInput);
}

}  // namespace
}  // namespace isingcn
