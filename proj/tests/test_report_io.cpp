#include <gtest/gtest.h>

#include "eccbounds/families.hpp"
#include "eccbounds/graph6.hpp"
#include "eccbounds/report_io.hpp"

using eccb::BoundId;

TEST(ReportJson, InvariantsCarryExactHarary) {
  const auto j = eccb::to_json(eccb::compute_all(eccb::parse_graph6("Ch")));
  EXPECT_EQ(j["xi_c"], 24);
  EXPECT_EQ(j["harary"]["num"], 13);
  EXPECT_EQ(j["harary"]["den"], 3);
  EXPECT_EQ(j["profile"]["eccentricity"], nlohmann::ordered_json::parse("[3,2,2,3]"));
}

TEST(ReportJson, WideHararyIsPrintedAsDecimalStrings) {
  const auto g = eccb::build(eccb::FamilySpec::parse("path:64"));
  const auto j = eccb::to_json(eccb::compute_all(g));
  ASSERT_TRUE(j["harary"]["num"].is_string());
  EXPECT_EQ(j["harary"]["den"], "2052546673789621992207225");
}

TEST(ReportJson, BoundCheckFields) {
  const auto g = eccb::parse_graph6("C~");
  const auto j = eccb::to_json(eccb::check(eccb::compute_all(g), g, BoundId::T3_U));
  EXPECT_EQ(j["id"], "T3_U");
  EXPECT_EQ(j["lhs"], "1296 (squared)");
  EXPECT_EQ(j["equality"], true);
  EXPECT_EQ(j["agreement"], true);
  EXPECT_FALSE(j.contains("alt_agreement"));
  const auto t10 = eccb::to_json(eccb::check(eccb::compute_all(g), g, BoundId::T10_L));
  EXPECT_TRUE(t10.contains("alt_agreement"));
}

TEST(ReportJson, FamilyNoFormulaHasNullPrediction) {
  const auto j = eccb::to_json(eccb::evaluate_family(eccb::FamilySpec::parse("path:5")));
  EXPECT_TRUE(j["predicted"].is_null());
  EXPECT_EQ(j["status"], "NO_FORMULA");
  EXPECT_EQ(j["matches"], false);
}

TEST(ReportJson, SweepRunInfoIsOptional) {
  eccb::SweepConfig cfg;
  cfg.n_max = 3;
  const auto report = eccb::sweep(cfg);
  EXPECT_TRUE(eccb::to_json(report, true).contains("run"));
  const auto j = eccb::to_json(report, false);
  EXPECT_FALSE(j.contains("run"));
  EXPECT_EQ(j["total_graphs"], 5);
  EXPECT_EQ(j["bounds"].size(), eccb::kBoundCount);
  for (const auto& b : j["bounds"]) {
    EXPECT_EQ(b["expected_regression"], b["id"] == "T1ii_stated_U");
  }
}

TEST(ReportCsv, HeaderAndRows) {
  const std::string inv = eccb::to_csv(eccb::compute_all(eccb::parse_graph6("Ch")));
  EXPECT_EQ(inv.substr(0, inv.find(',')), "n");
  EXPECT_NE(inv.find("13/3"), std::string::npos);
  EXPECT_EQ(std::count(inv.begin(), inv.end(), '\n'), 2);

  const auto fam = eccb::to_csv(eccb::evaluate_family(eccb::FamilySpec::parse("pyramid:4")));
  EXPECT_NE(fam.find("pyramid:4,5,8,92,52,KNOWN_DISCREPANCY"), std::string::npos);

  const auto g = eccb::parse_graph6("C~");
  const auto checks = eccb::to_csv(eccb::check_all(g));
  EXPECT_EQ(std::count(checks.begin(), checks.end(), '\n'), 24);

  eccb::SweepConfig cfg;
  cfg.n_max = 3;
  const auto sweep = eccb::to_csv(eccb::sweep(cfg));
  EXPECT_EQ(std::count(sweep.begin(), sweep.end(), '\n'), 1 + static_cast<long>(eccb::kBoundCount));
}

TEST(ReportCsv, NotesWithCommasAreQuoted) {
  const auto fam = eccb::to_csv(eccb::evaluate_family(eccb::FamilySpec::parse("bipyramid:3")));
  EXPECT_NE(fam.find("\"stated"), std::string::npos);
}
