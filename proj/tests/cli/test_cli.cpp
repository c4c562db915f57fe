/* SPDX-License-Identifier: Apache-2.0
 *
 * Tests of the report and figure layer of the command-line tool.
 */
#include <gtest/gtest.h>

#include <string>

#include "figure.hpp"
#include "report.hpp"

using namespace k3wall;
using namespace k3wall::cli;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

const json& check(const json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["name"] == name) return c;
  throw std::out_of_range(name);
}

}  // namespace

TEST(Report, Verify13) {
  const Report r = run_verify(Surface(13), VerifyOptions{});
  EXPECT_EQ(exit_code(r), 0);
  const json j = to_json(r, false);
  EXPECT_EQ(j["surface"]["p"], 13);
  EXPECT_EQ(j["surface"]["m"], 3);
  EXPECT_EQ(j["surface"]["g"], 14);
  ASSERT_EQ(j["checks"].size(), 6u);
  EXPECT_EQ(j["checks"][0]["name"], "m_and_classes");
  EXPECT_EQ(j["checks"][4]["name"], "polygon");
  EXPECT_EQ(check(j, "polygon")["numbers"]["max_interior_bound"], "21");
  EXPECT_TRUE(j["tables"].is_null());
  EXPECT_FALSE(j.contains("runtime_ms"));
}

TEST(Report, EveryCheckHasVerdictOrDisclaimer) {
  const json j = to_json(run_verify(Surface(19), VerifyOptions{}), false);
  for (const auto& c : j["checks"]) {
    const std::string status = c["status"];
    EXPECT_TRUE(status == "Verified" || status == "Proved") << c["name"];
    if (!c["search_bounds"].is_null()) {
      EXPECT_FALSE(c["search_bounds"]["disclaimer"].get<std::string>().empty());
    }
  }
  EXPECT_EQ(check(j, "grey_region_roots")["search_bounds"]["s_max"], 100000);
}

TEST(Report, RoundTripAndDeterminism) {
  VerifyOptions opt;
  opt.s_max = 2000;
  const std::string a = to_json(run_verify(Surface(17), opt), false).dump(2);
  const std::string b = to_json(run_verify(Surface(17), opt), false).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(json::parse(a).dump(2), a);
  const json t = json::parse(a)["tables"];
  ASSERT_FALSE(t.is_null());
  EXPECT_EQ(t["p"], 17);
}

TEST(Report, RuntimeIsSegregated) {
  VerifyOptions opt;
  opt.s_max = 100;
  const Report r = run_verify(Surface(13), opt);
  const json with = to_json(r, true);
  ASSERT_TRUE(with.contains("runtime_ms"));
  EXPECT_EQ(with["runtime_ms"].size(), r.checks.size());
  json without = with;
  without.erase("runtime_ms");
  EXPECT_EQ(without, to_json(r, false));
}

TEST(Report, LargePRoute) {
  VerifyOptions opt;
  opt.s_max = 1000;
  const json j = to_json(run_verify(Surface(31), opt), false);
  const json& poly = check(j, "polygon");
  EXPECT_EQ(poly["status"], "Verified");
  EXPECT_EQ(poly["numbers"]["route"], "large-p certificate");
  EXPECT_EQ(poly["numbers"]["f1"], "81/80");
}

TEST(Report, CappedSearchGivesExitTwo) {
  VerifyOptions opt;
  opt.s_max = 100;
  opt.budget_sec = 0.0;
  const Report r = run_verify(Surface(23), opt);
  EXPECT_EQ(exit_code(r), 2);
}

TEST(Report, ExitCodePrecedence) {
  Report r;
  r.checks.resize(2);
  r.checks[0].status = CheckStatus::Verified;
  r.checks[1].status = CheckStatus::Proved;
  EXPECT_EQ(exit_code(r), 0);
  r.checks[1].status = CheckStatus::ResourceCapped;
  EXPECT_EQ(exit_code(r), 2);
  r.checks[0].status = CheckStatus::Failed;
  EXPECT_EQ(exit_code(r), 1);
}

TEST(Report, MarkdownSummary) {
  VerifyOptions opt;
  opt.s_max = 100;
  const std::string md = to_markdown(run_verify(Surface(13), opt), false);
  EXPECT_NE(md.find("result: PASS (exit 0)"), std::string::npos);
  EXPECT_NE(md.find("max_interior_bound: 21"), std::string::npos);
}

TEST(Tables, JsonCounts) {
  const json t = tables_json(reproduce_tables(Surface(17)));
  EXPECT_EQ(t["cells"], 36);
  EXPECT_FALSE(t["all_cells_match"].get<bool>());
  EXPECT_EQ(t["mismatch_count"], 4);
}

TEST(Roots, Summary) {
  const Surface X(23);
  const RootScan scan = enumerate_roots_in_region(grey_region(X), X, 100000);
  EXPECT_EQ(roots_summary(scan), "no roots found; segments (op_v),(oq),(op_u): Proved");
}

TEST(Figure, TriangleHasPolygonsAndMarkers) {
  const std::string svg = render_figure(Surface(13), FigureKind::Triangle);
  EXPECT_EQ(count(svg, "class=\"polygon\""), 3u);
  EXPECT_GE(count(svg, "class=\"lattice\""), 40u);
  EXPECT_EQ(svg, render_figure(Surface(13), FigureKind::Triangle));
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
}

TEST(Figure, GreyAndHoles) {
  const std::string grey = render_figure(Surface(13), FigureKind::Grey);
  EXPECT_EQ(count(grey, "id=\"grey-region\""), 1u);
  EXPECT_EQ(count(grey, "id=\"parabola\""), 1u);
  EXPECT_GE(count(grey, "class=\"hole\""), 1u);
  EXPECT_EQ(grey.find("<="), std::string::npos); /* text is escaped */
  const std::string holes = render_figure(Surface(13), FigureKind::Holes);
  EXPECT_EQ(count(holes, "id=\"grey-region\""), 0u);
  EXPECT_EQ(count(holes, "class=\"hole\""), count(grey, "class=\"hole\""));
}
