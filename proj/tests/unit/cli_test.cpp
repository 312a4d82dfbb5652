#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "commands.hpp"
#include "run_config.hpp"
#include "isingcn/errors.hpp"
#include "isingcn/io.hpp"

namespace isingcn::cli {
namespace {

std::string temp_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("isingcn_cli_" + name);
  std::filesystem::remove_all(dir);
  return dir.string();
}

TEST(ParseGrid, ListAndRange) {
  EXPECT_EQ(parse_grid("0.1,0.2, 0.3"), (std::vector<double>{0.1, 0.2, 0.3}));
  const auto g = parse_grid("0:100:10");
  ASSERT_EQ(g.size(), 11u);
  EXPECT_EQ(g.back(), 100.0);
  EXPECT_EQ(parse_grid("0.08:0.16:0.01").size(), 9u);
  EXPECT_THROW(parse_grid(""), InvalidInput);
  EXPECT_THROW(parse_grid("1,x"), InvalidInput);
  EXPECT_THROW(parse_grid("0:1:0"), InvalidInput);
  EXPECT_THROW(parse_grid("1:0:0.5"), InvalidInput);
}

TEST(ParseRange, Validates) {
  EXPECT_EQ(parse_range("10:25"), (std::pair<std::size_t, std::size_t>{10, 25}));
  EXPECT_THROW(parse_range("10"), InvalidInput);
  EXPECT_THROW(parse_range("a:b"), InvalidInput);
}

TEST(RunConfig, ValidationAndDistortion) {
  RunConfig c;
  EXPECT_NO_THROW(c.validate());
  EXPECT_FALSE(c.distortion().has_value());
  c.distort_mode = "fixed_offset";
  EXPECT_THROW(c.validate(), InvalidInput);
  c.distort_range = "10:20";
  c.epsilon0 = 0.001;
  c.seed = 9;
  const auto d = c.distortion();
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->first, 10u);
  EXPECT_EQ(d->last, 20u);
  EXPECT_EQ(d->seed, 9u);
  c.rabi = -1.0;
  EXPECT_THROW(c.validate(), InvalidInput);
}

TEST(RunConfig, ReportThresholdDefaults) {
  RunConfig c;
  EXPECT_EQ(c.effective_report_threshold(), c.threshold);
  c.threshold = 0.0;
  EXPECT_EQ(c.effective_report_threshold(), 5e-7);
  c.report_threshold = 1e-3;
  EXPECT_EQ(c.effective_report_threshold(), 1e-3);
}

TEST(Commands, CompilePrintsPulseCount) {
  for (auto [n, l] : {std::pair<std::size_t, std::size_t>{200, 397}, {1000, 1997}}) {
    RunConfig c;
    c.n = n;
    c.out = temp_dir("compile");
    std::ostringstream out, err;
    EXPECT_EQ(cmd_compile(c, out, err), 0) << err.str();
    EXPECT_NE(out.str().find("L=" + std::to_string(l) + "\n"), std::string::npos);
    EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(c.out) / "sequence.json"));
  }
}

TEST(Commands, CompileRejectsTwoSpins) {
  RunConfig c;
  c.n = 2;
  c.out = temp_dir("compile2");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_compile(c, out, err), 1);
  EXPECT_FALSE(err.str().empty());
}

TEST(Commands, RunIsByteDeterministic) {
  RunConfig c;
  c.n = 40;
  c.rabi = 0.14;
  c.distort_mode = "uniform_random";
  c.distort_range = "3:30";
  c.epsilon0 = 0.004;
  c.seed = 5;
  std::ostringstream out, err;
  c.out = temp_dir("run_a");
  ASSERT_EQ(cmd_run(c, out, err), 0) << err.str();
  const auto first = c.out;
  c.out = temp_dir("run_b");
  ASSERT_EQ(cmd_run(c, out, err), 0) << err.str();
  for (const char* file : {"sequence.json", "report.json", "unwanted.csv", "trace.csv"}) {
    EXPECT_EQ(read_text_file(first + "/" + file), read_text_file(c.out + "/" + file)) << file;
  }
}

TEST(Commands, SweepWritesOneRowPerPoint) {
  RunConfig c;
  c.n = 20;
  c.experiment = "omega_sweep";
  c.grid = "0.08:0.16:0.02";
  c.out = temp_dir("sweep");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_sweep(c, out, err), 0) << err.str();
  const auto text = read_text_file(c.out + "/sweep.csv");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 6);
  c.grid = "";
  EXPECT_EQ(cmd_sweep(c, out, err), 1);
}

TEST(Commands, OracleChecksPassAndFaultIsCaught) {
  RunConfig c;
  c.dense_n = 5;
  for (const auto& check : run_oracle_checks(c)) EXPECT_TRUE(check.passed) << check.name;
  c.inject_fault = true;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_oracle_check(c, out, err), 1);
  EXPECT_NE(out.str().find("FAIL propagator_unitarity"), std::string::npos) << out.str();
}

}  // namespace
}  // namespace isingcn::cli
