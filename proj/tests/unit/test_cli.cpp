#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "comax/cli.hpp"

namespace comax::cli {
namespace {

std::string golden(const char* name) { return std::string(COMAX_GOLDEN_DIR) + "/" + name; }

SuiteConfig small_theorem2() {
  SuiteConfig c;
  c.samples = 200;
  c.prefix_max = 1;
  return c;
}

TEST(Cli, VerifyCounterexampleWithDefaultsSucceeds) {
  const auto out = run("verify-counterexample", small_theorem2());
  ASSERT_EQ(out.exit_code, kExitOk);
  const auto& r = *out.report;
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_EQ(r.count("nonmonotonicity_witness"), 1);
  EXPECT_EQ(r.count("maxitivity_violations"), 0);
  EXPECT_EQ(r.count("maxitivity_checked"), r.count("family_comonotone_pairs") + r.count("sampled_pairs"));
  const auto& w = r.witnesses.front();
  EXPECT_EQ(w.at("f_leq_g"), true);
}

TEST(Cli, FiniteCensusOnBooleanChain) {
  SuiteConfig c;
  c.grid = {Rational(0), Rational(1)};
  const auto out = run("finite-census", c);
  ASSERT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.report->count("total"), 16);
  EXPECT_EQ(out.report->config_echo.at("grid"), nlohmann::json({"0", "1"}));
}

TEST(Cli, CensusBudgetRefusal) {
  SuiteConfig c;
  c.n = 3;
  c.budget = 1'000'000;
  const auto out = run("finite-census", c);
  EXPECT_EQ(out.exit_code, kExitBadInput);
  ASSERT_TRUE(out.report.has_value());
  EXPECT_EQ(out.report->status, Status::Inconclusive);
  EXPECT_EQ(out.report->witnesses.at(0).at("required"), "7625597484987");
}

TEST(Cli, ComonotoneCheckFindsWitness) {
  SuiteConfig c;
  c.inputs = {golden("f0.json"), golden("f1.json")};
  const auto out = run("comonotone-check", c);
  ASSERT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.report->status, Status::Finding);
  const auto& w = out.report->witnesses.at(0);
  EXPECT_EQ(w.at("witness"), nlohmann::json({"P", "Index(2)"}));
  EXPECT_EQ(w.at("product"), "-1/4");

  c.inputs = {golden("f1.json"), golden("const_third.json"), golden("f1_padded.json")};
  const auto all_ok = run("comonotone-check", c);
  EXPECT_EQ(all_ok.report->status, Status::Pass);
  EXPECT_EQ(all_ok.report->count("pairs_checked"), 3);

  c.inputs = {golden("up.json"), golden("down.json")};
  const auto grid = run("comonotone-check", c);
  EXPECT_EQ(grid.report->status, Status::Finding);
  EXPECT_EQ(grid.report->witnesses.at(0).at("product"), "-1");
}

TEST(Cli, BadInputsExitTwo) {
  SuiteConfig c;
  c.inputs = {golden("bad_vp.json")};
  auto out = run("validate", c);
  EXPECT_EQ(out.exit_code, kExitBadInput);
  EXPECT_FALSE(out.report.has_value());
  ASSERT_FALSE(out.diagnostics.empty());
  EXPECT_NE(out.diagnostics[0].find("/vP"), std::string::npos);

  c.inputs = {golden("bad_capacity.json")};
  out = run("validate", c);
  EXPECT_EQ(out.exit_code, kExitBadInput);
  EXPECT_NE(out.diagnostics.at(0).find("monotonicity violation"), std::string::npos);

  c.inputs = {golden("truncated.json")};
  EXPECT_EQ(run("validate", c).exit_code, kExitBadInput);
  c.inputs = {golden("no_such_file.json")};
  EXPECT_EQ(run("validate", c).exit_code, kExitBadInput);
  c.inputs = {golden("f0.json"), golden("up.json")};
  EXPECT_EQ(run("comonotone-check", c).exit_code, kExitBadInput);

  SuiteConfig bad_grid;
  bad_grid.grid = {Rational(0), Rational(1, 2)};
  EXPECT_EQ(run("finite-census", bad_grid).exit_code, kExitBadInput);
  EXPECT_EQ(run("no-such-command", SuiteConfig{}).exit_code, kExitBadInput);
}

TEST(Cli, ValidateReportsCanonicalForm) {
  SuiteConfig c;
  c.inputs = {golden("f1_padded.json"), golden("halves_capacity.json")};
  const auto out = run("validate", c);
  ASSERT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.report->witnesses.at(0).at("prefix_length"), 0);
  EXPECT_EQ(out.report->witnesses.at(1).at("kind"), "capacity");
}

TEST(Cli, OtherSuites) {
  SuiteConfig c;
  auto out = run("integral-properties", c);
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.report->status, Status::Pass);
  out = run("tnorm-axioms", c);
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.report->count("minimum.violations"), 0);
  c.samples = 100;
  out = run("explore-problem1", c);
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.report->status, Status::Inconclusive);
}

TEST(Cli, JobsDoNotChangeReport) {
  auto c = small_theorem2();
  const auto one = run("verify-counterexample", c).report->serialize();
  c.jobs = 4;
  c.output_path = "ignored.json";
  EXPECT_EQ(run("verify-counterexample", c).report->serialize(), one);
  c.seed = 1;
  EXPECT_NE(run("verify-counterexample", c).report->serialize(), one);
}

TEST(Cli, MainEntryWritesOutputFile) {
  const std::string path = ::testing::TempDir() + "comax_cli_out.json";
  std::string args[] = {"comax", "finite-census", "--grid", "0,1", "--output", path};
  char* argv[] = {args[0].data(), args[1].data(), args[2].data(), args[3].data(), args[4].data(), args[5].data()};
  ASSERT_EQ(main_entry(6, argv), kExitOk);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(nlohmann::json::parse(text.str()).at("counts").at("total"), 16);
  std::remove(path.c_str());

  std::string bad[] = {"comax", "finite-census", "--n", "zero"};
  char* bad_argv[] = {bad[0].data(), bad[1].data(), bad[2].data(), bad[3].data()};
  EXPECT_EQ(main_entry(4, bad_argv), kExitBadInput);
}

}  // namespace
}  // namespace comax::cli
