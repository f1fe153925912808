#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <string>

#include <omp.h>

#include "ginv/error.hpp"
#include "ginv/law_parser.hpp"
#include "ginv/theorem_suite.hpp"

using namespace ginv;

namespace {

std::vector<SuiteCarrier> rings(std::initializer_list<const char*> specs) {
  std::vector<SuiteCarrier> out;
  for (const char* s : specs) out.push_back(SuiteCarrier::parse(s));
  return out;
}

std::set<std::string> failing_ids(const Dashboard& d) {
  std::set<std::string> out;
  for (const auto& e : d.entries)
    if (e.counterexample_count > 0) out.insert(e.id);
  return out;
}

}  // namespace

TEST(Catalog, MatchesManifest) {
  std::ifstream in(GINV_SUITE_DIR "/manifest.txt");
  ASSERT_TRUE(in);
  std::vector<std::string> manifest;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') manifest.push_back(line);
  std::vector<std::string> ids;
  for (const auto& e : theorem_catalog()) ids.push_back(e.id);
  EXPECT_EQ(ids, manifest);
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
}

TEST(Catalog, EveryLawParses) {
  for (const auto& e : theorem_catalog()) {
    ASSERT_FALSE(e.laws.empty()) << e.id;
    for (const auto& l : e.laws) EXPECT_NO_THROW(parse_law(l)) << e.id << ": " << l;
  }
}

TEST(Catalog, UnknownTheorem) {
  try {
    find_theorem("NO-SUCH-ID");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownTheorem);
  }
}

TEST(RunTheorem, Examples) {
  const SuiteOptions o;
  const auto z6 = SuiteCarrier::parse("Zn:6");
  EXPECT_EQ(run_theorem("WD-ADD", z6, o).status, ReportStatus::Pass);
  EXPECT_EQ(run_theorem("PRE-MP-ADD", z6, o).status, ReportStatus::Pass);
  for (const auto& spec : default_roster()) {
    const auto e = run_theorem("WD-IDEMP", SuiteCarrier::parse(spec), o);
    EXPECT_EQ(e.status, ReportStatus::Pass) << spec;
    EXPECT_GT(e.bindings_checked, 0u);
  }
}

TEST(RunTheorem, MatricesRejectExhaustiveMode) {
  SuiteOptions o;
  o.matrix.mode = EvalMode::Exhaustive;
  try {
    run_theorem("WD-IDEMP", SuiteCarrier::parse("matrices"), o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InapplicableCarrier);
  }
}

TEST(RunTheorem, SampledMatrixEntry) {
  SuiteOptions o;
  o.matrix.samples = 40;
  const auto e = run_theorem("WDMP-SOLVE", SuiteCarrier::parse("matrices"), o);
  EXPECT_EQ(e.status, ReportStatus::Pass);
  EXPECT_EQ(e.carrier, "matrices");
  EXPECT_GE(e.bindings_checked, 40u);
}

TEST(RunTheorem, RightPseudoCoreClaimFailsOnNilpotent) {
  // e12 in M2:Z2 has WDMP inverses but its right pseudo core inverse is 0
  const auto e = run_theorem("WDMP-RPC", SuiteCarrier::parse("M2:Z2"), SuiteOptions{});
  EXPECT_EQ(e.status, ReportStatus::Fail);
  ASSERT_GT(e.counterexample_count, 0u);
  EXPECT_EQ(e.counterexamples[0]["values"]["a"], "[[0,1],[0,0]]");
  EXPECT_NE(std::find(e.flags.begin(), e.flags.end(), "possible-properness-gap"), e.flags.end());
}

TEST(RunTheorem, UntiedWdmpWitnessesBreakMixedLaw) {
  // with the WDMP inverse of a chosen apart from a^{wd}, the law fails
  TheoremEntry untied{"UNTIED", "", {"(a*b)^{wdmp} = b^{wdmp}*a^{wdmp} => b*(a*b)^{wdmp}*a = b*b^{mp}*a^{wd}*a"}};
  const auto m = SuiteCarrier::parse("M2:Z2");
  EXPECT_EQ(run_theorem(untied, m, SuiteOptions{}).status, ReportStatus::Fail);
  EXPECT_EQ(run_theorem("WDMP-MIXED-1", m, SuiteOptions{}).status, ReportStatus::Pass);
}

TEST(RunAll, RosterPassesExceptRightPseudoCore) {
  std::vector<SuiteCarrier> carriers;
  for (const auto& spec : default_roster()) carriers.push_back(SuiteCarrier::parse(spec));
  const Dashboard d = run_all(carriers, SuiteOptions{});
  EXPECT_EQ(d.entries.size(), theorem_catalog().size() * carriers.size());
  for (const auto& e : d.entries) {
    if (e.id == "WDMP-RPC" && e.carrier == "M2:Z2") continue;
    EXPECT_EQ(e.counterexample_count, 0u) << e.id << " on " << e.carrier;
  }
  EXPECT_EQ(failing_ids(d), std::set<std::string>{"WDMP-RPC"});
}

TEST(RunAll, CorruptedCheckerIsFlagged) {
  auto catalog = theorem_catalog();
  for (auto& e : catalog)
    if (e.id == "WD-IDEMP") e.laws = {"p*p = p => p in wd(1 - p)"};
  const Dashboard d = run_all(rings({"Zn:4", "Zn:5", "Zn:6", "Zn:8", "Zn:12"}), SuiteOptions{}, catalog);
  EXPECT_EQ(failing_ids(d), std::set<std::string>{"WD-IDEMP"});
  EXPECT_TRUE(d.any_counterexample());
}

TEST(RunAll, EmptyCarrierList) {
  const Dashboard d = run_all({}, SuiteOptions{});
  EXPECT_TRUE(d.entries.empty());
  EXPECT_FALSE(d.any_counterexample());
  EXPECT_TRUE(dashboard_to_json(d)["entries"].empty());
}

TEST(RunAll, SelectedIdsInCatalogOrderPerCarrier) {
  SuiteOptions o;
  o.ids = {"WD-ADD", "PRE-ANN"};
  const Dashboard d = run_all(rings({"Zn:4", "Zn:6"}), o);
  ASSERT_EQ(d.entries.size(), 4u);
  EXPECT_EQ(d.entries[0].id, "WD-ADD");
  EXPECT_EQ(d.entries[1].carrier, "Zn:6");
  EXPECT_EQ(d.entries[2].id, "PRE-ANN");
  o.ids = {"BOGUS"};
  EXPECT_THROW(run_all(rings({"Zn:4"}), o), Error);
}

TEST(RunAll, ReproducibleAcrossRunsAndThreadCounts) {
  SuiteOptions o;
  o.matrix.samples = 20;
  o.ids = {"WD-ROL-A", "WDMP-PROPS-i", "IDEMP-EQ", "WDMP-RPC"};
  std::vector<SuiteCarrier> carriers = rings({"Zn:12", "M2:Z2"});
  carriers.push_back(SuiteCarrier::parse("matrices"));
  const std::string a = dashboard_to_json(run_all(carriers, o), true).dump();
  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
  const std::string b = dashboard_to_json(run_all(carriers, o), true).dump();
  omp_set_num_threads(std::max(2, threads));
  const std::string c = dashboard_to_json(run_all(carriers, o), true).dump();
  omp_set_num_threads(threads);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Dashboard, JsonCarriesProvenance) {
  SuiteOptions o;
  o.ids = {"WD-IDEMP"};
  const auto j = dashboard_to_json(run_all(rings({"Zn:6"}), o));
  EXPECT_EQ(j["version"], std::string(kToolVersion));
  EXPECT_EQ(j["seed"], 0);
  EXPECT_EQ(j["carriers"][0], "Zn:6");
  EXPECT_EQ(j["budget"]["samples"], 200);
  const auto& e = j["entries"][0];
  for (const char* key : {"id", "carrier", "status", "bindings_checked", "counterexamples"}) EXPECT_TRUE(e.contains(key));
  EXPECT_EQ(e["status"], "pass");
}
